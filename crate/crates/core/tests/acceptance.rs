//! Acceptance run: one line per criterion with its time against the limit.
//!
//! Checks here avoid the library's own certificate code where possible:
//! palindromes are compared letter by letter and products are evaluated as
//! one concatenated word.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use palinwidth::commutators::{commutator_word, express_in_derived, product_of_commutators, CommutatorData};
use palinwidth::decompose::{
    certify, decompose_commutator_pair, decompose_commutator_abelian_top, decompose_derived_wreath,
    decompose_full_finite_top, decompose_shifted_commutators, find_reversal_asymmetric_relation,
    push_factorization, PalindromeFactorization,
};
use palinwidth::groups::Homomorphism;
use palinwidth::oracle::{exact_palindromic_width, PalindromeSet};
use palinwidth::{presets, sampling, Element, Group, Letter, Word, WreathElement, WreathGroup};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn is_literal_palindrome(w: &Word) -> bool {
    let l = w.letters();
    l.iter().eq(l.iter().rev())
}

/// The extended wreath product a factorization lives in.
fn working(wreath: &WreathGroup, f: &PalindromeFactorization<WreathElement>) -> WreathGroup {
    match &f.extra_generator {
        Some(e) => wreath.with_top(&e.extend(wreath.top()).unwrap()).unwrap(),
        None => wreath.clone(),
    }
}

/// All factors are palindromes and their concatenation evaluates to `target`.
fn check_product(w: &WreathGroup, factors: &[Word], target: &WreathElement) -> Result<(), String> {
    for (i, f) in factors.iter().enumerate() {
        ensure(is_literal_palindrome(f), || format!("factor {i} `{f}` is not a palindrome"))?;
    }
    let all = Word::product(w.alphabet(), factors).map_err(|e| e.to_string())?;
    let value = w.evaluate(&all).map_err(|e| e.to_string())?;
    ensure(&value == target, || "product does not evaluate to the target".into())
}

fn word_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let alphabets: Vec<_> = (1..=4).map(|d| presets::free(d).alphabet().clone()).collect();
    for _ in 0..1000 {
        let a = &alphabets[rng.gen_range(0..4)];
        let u = sampling::random_word(&mut rng, a, 64);
        let v = sampling::random_word(&mut rng, a, 64);
        ensure(u.reverse().reverse() == u, || format!("double reverse of {u}"))?;
        let uv = u.concat(&v).unwrap();
        ensure(uv.reverse() == v.reverse().concat(&u.reverse()).unwrap(), || format!("reverse of {u} . {v}"))?;
        ensure(u.reverse().invert() == u.invert().reverse(), || format!("inverse and reverse of {u}"))?;
    }
    Ok("1000 word pairs, ranks 1 to 4".into())
}

fn abelian_reverse() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut groups: Vec<Group> = (1..=4).map(presets::free_abelian).collect();
    groups.push(presets::klein_four());
    groups.extend([2, 5, 12].map(presets::cyclic));
    groups.push(Group::product(&presets::cyclic(3), &presets::klein_four()).unwrap());
    for g in &groups {
        for _ in 0..1000 {
            let w = sampling::random_word(&mut rng, g.alphabet(), 40);
            let (a, b) = (g.evaluate(&w).unwrap(), g.evaluate(&w.reverse()).unwrap());
            ensure(a == b, || format!("{w} and its reverse differ in {}", g.kind()))?;
        }
    }
    Ok(format!("1000 words in each of {} abelian groups", groups.len()))
}

fn abelian_top() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f2z2 = WreathGroup::new(&presets::free(2), &presets::free_abelian(2)).unwrap();
    let f2z = WreathGroup::new(&presets::free(2), &presets::free_abelian(1)).unwrap();
    let mut pair_max = 0;
    for (wreath, n, expected) in [(&f2z2, 2usize, 4usize), (&f2z, 1, 3)] {
        let base_letters: Vec<Letter> = wreath.alphabet().letters().filter(|l| !wreath.is_top_letter(*l)).collect();
        for _ in 0..200 {
            let mut a_len = || rng.gen_range(0..=8);
            let (la, lb) = (a_len(), a_len());
            let a = sampling::word_from(&mut rng, wreath.alphabet(), &base_letters, la);
            let b = sampling::word_from(&mut rng, wreath.alphabet(), &base_letters, lb);
            let exps: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
            let t = Word::from_blocks(wreath.alphabet(), &exps.iter().copied().enumerate().collect::<Vec<_>>()).unwrap();
            let t2 = Word::from_blocks(
                wreath.alphabet(),
                &exps.iter().map(|e| 2 * e).enumerate().collect::<Vec<_>>(),
            )
            .unwrap();

            let f = decompose_commutator_abelian_top(wreath, &a, &exps).map_err(|e| e.to_string())?;
            ensure(f.len() == expected, || format!("[{a}, t^{exps:?}] gave {} factors", f.len()))?;
            let target = wreath.evaluate(&commutator_word(&a, &t).unwrap()).unwrap();
            check_product(wreath, &f.factors, &target)?;

            let p = decompose_commutator_pair(wreath, &a, &b, &exps).map_err(|e| e.to_string())?;
            let cap = if n % 2 == 0 { 4 * n } else { 4 * n + 2 };
            ensure(p.len() <= cap, || format!("pair gave {} > {cap}", p.len()))?;
            let pair = commutator_word(&a, &t).unwrap().concat(&commutator_word(&b, &t2).unwrap()).unwrap();
            check_product(wreath, &p.factors, &wreath.evaluate(&pair).unwrap())?;
            pair_max = pair_max.max(p.len());
        }
    }
    Ok(format!("200 instances each for n = 2 (4 factors) and n = 1 (3 factors); pair at most {pair_max}"))
}

fn shifted() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let wreath = WreathGroup::new(&presets::s3(), &presets::free_abelian(1)).unwrap();
    let base = wreath.base().alphabet().clone();
    for _ in 0..100 {
        let pos = sampling::random_position(&mut rng, &wreath, 4);
        let f = sampling::random_word(&mut rng, &base, 6);
        let g = sampling::random_word(&mut rng, &base, 6);
        let mut cd = CommutatorData::new();
        cd.push(pos, vec![(f.clone(), g.clone())]);
        let a_top = sampling::random_position(&mut rng, &wreath, 4);
        let fact = decompose_shifted_commutators(&wreath, &cd, &a_top, None).map_err(|e| e.to_string())?;
        let top_count = usize::from(!wreath.top().is_identity(&a_top));
        ensure(fact.len() == 7 + top_count, || format!("[{f}, {g}] gave {} factors", fact.len()))?;
        let target = wreath.multiply(&wreath.from_top(&a_top).unwrap(), &cd.target(&wreath).unwrap()).unwrap();
        check_product(&wreath, &fact.factors, &target)?;
    }
    Ok("100 single commutators, 7 palindromes plus the top".into())
}

fn derived_finite_top() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let s3 = presets::s3();
    let wreath = WreathGroup::new(&presets::free(2), &s3).unwrap();
    let witness = find_reversal_asymmetric_relation(&s3, 64).map_err(|e| e.to_string())?;
    let pw = exact_palindromic_width(&s3).map_err(|e| e.to_string())?.width;
    let mut worst = 0;
    for _ in 0..100 {
        let cd = sampling::random_commutator_data(&mut rng, &wreath, 3, 2, 4);
        let a_top = sampling::random_position(&mut rng, &wreath, 0);
        let fact = decompose_derived_wreath(&wreath, &cd, &a_top, &witness).map_err(|e| e.to_string())?;
        let work = working(&wreath, &fact);
        ensure(fact.len() <= pw + 1, || format!("{} factors > pw + 1 = {}", fact.len(), pw + 1))?;
        let target = wreath.multiply(&wreath.from_top(&a_top).unwrap(), &cd.target(&wreath).unwrap()).unwrap();
        let target = work.evaluate(&work.assemble(&wreath.normal_form(&target).unwrap()).unwrap().translate(work.alphabet()).unwrap()).unwrap();
        check_product(&work, &fact.factors, &target)?;
        if !cd.is_empty() {
            // The last factor is h . reverse(h); its second half must vanish.
            let last = fact.factors.last().ok_or("no palindrome for nonempty data")?;
            let half = last.len() / 2;
            ensure(last.len() % 2 == 0, || "h . reverse(h) has odd length".into())?;
            let rev_h = Word::from_letters(work.alphabet(), last.letters()[half..].to_vec()).unwrap();
            ensure(work.is_identity(&work.evaluate(&rev_h).unwrap()), || format!("reverse(h) = {rev_h} is not trivial"))?;
        }
        worst = worst.max(fact.len());
    }
    let extra = witness.extra_generator.as_ref().map_or("none".into(), |e| format!("{} = {}", e.name, e.word));
    Ok(format!("100 instances, at most {worst} factors, pw(S3) = {pw}, extra generator {extra}"))
}

/// Palindromic values by length: `V_0 = {1}`, `V_1` the letters, `V_{L+2} = {x v x}`.
fn naive_palindromes(g: &Group) -> Vec<usize> {
    let n = g.order().unwrap();
    let letters: Vec<Element> = g.alphabet().letters().map(|l| g.letter_value(l).unwrap()).collect();
    let idx = |e: &Element| match e {
        Element::Finite(i) => *i,
        _ => unreachable!(),
    };
    let mut seen = vec![false; n];
    let mut layers: [Vec<bool>; 2] = [vec![false; n], vec![false; n]];
    layers[0][idx(&g.identity())] = true;
    for x in &letters {
        layers[1][idx(x)] = true;
    }
    for len in 0..=2 * n + 1 {
        let cur = &layers[len % 2];
        for (i, &b) in cur.iter().enumerate() {
            seen[i] |= b;
        }
        let mut next = vec![false; n];
        for (i, _) in cur.iter().enumerate().filter(|(_, b)| **b) {
            for x in &letters {
                let v = g.multiply(&g.multiply(x, &Element::Finite(i)).unwrap(), x).unwrap();
                next[idx(&v)] = true;
            }
        }
        layers[len % 2] = next;
    }
    (0..n).filter(|&i| seen[i]).collect()
}

fn oracle_exactness() -> Outcome {
    let mut groups = vec![presets::s3(), presets::s4(), presets::d4(), presets::q8(), presets::klein_four()];
    groups.extend((3..=12).map(|n| presets::dihedral(n).unwrap()).filter(|g| g.order().unwrap() <= 24));
    groups.extend((1..=24).map(presets::cyclic));
    for g in &groups {
        let set = PalindromeSet::build(g).map_err(|e| e.to_string())?;
        ensure(set.elements() == naive_palindromes(g), || format!("mismatch in a group of order {:?}", g.order()))?;
    }
    let v4 = presets::klein_four();
    let r = exact_palindromic_width(&v4).map_err(|e| e.to_string())?;
    let witness = v4.represent(&Element::Finite(r.witness)).unwrap().to_string();
    ensure(r.width == 2 && witness == "a b", || format!("V4 width {} witness {witness}", r.width))?;
    Ok(format!("{} groups agree; V4 width 2 at a b", groups.len()))
}

fn monotonicity() -> Outcome {
    let mut checked = 0;
    for g in [presets::s3(), presets::d4(), presets::q8()] {
        let base = exact_palindromic_width(&g).map_err(|e| e.to_string())?.width;
        for e in g.elements().unwrap() {
            let wider = g.with_extra_generator("z", &e).unwrap();
            let w = exact_palindromic_width(&wider).map_err(|e| e.to_string())?.width;
            ensure(w <= base, || format!("adding {} raised the width {base} -> {w}", g.format_element(&e)))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} enlarged generating sets"))
}

fn quotient_push() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let f2 = presets::free(2);
    let a = f2.alphabet().clone();
    let targets = [presets::klein_four(), presets::s3()];
    let homs: Vec<Homomorphism> = targets
        .iter()
        .map(|t| {
            let images: Vec<Element> = (0..t.rank()).map(|i| t.letter_value(Letter::pos(i)).unwrap()).collect();
            Homomorphism::quotient_map(&f2, t, &images).unwrap()
        })
        .collect();
    for _ in 0..50 {
        let k = rng.gen_range(1..=5);
        let factors: Vec<Word> = (0..k)
            .map(|_| {
                let u = sampling::random_word(&mut rng, &a, 5);
                let center = if rng.gen_bool(0.5) { sampling::random_word(&mut rng, &a, 1) } else { Word::empty(&a) };
                Word::product(&a, [&u, &center, &u.reverse()]).unwrap()
            })
            .collect();
        let target = f2.evaluate(&Word::product(&a, &factors).unwrap()).unwrap();
        let fact = certify(&f2, target, factors, None).map_err(|e| e.to_string())?;
        for hom in &homs {
            let pushed = push_factorization(hom, &fact).map_err(|e| e.to_string())?;
            ensure(pushed.len() == fact.len(), || "factor count changed".into())?;
            let direct = hom.target().evaluate(&hom.push_word(&fact.word().unwrap()).unwrap()).unwrap();
            ensure(direct == pushed.target, || "pushed target differs".into())?;
        }
    }
    Ok("50 factorizations into V4 and S3".into())
}

fn full_finite_top() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let s3 = presets::s3();
    let wreath = WreathGroup::new(&presets::free(2), &s3).unwrap();
    let max_len = s3.geodesics().unwrap().diameter();
    let bound = max_len * (2 * 6 + 1) + 1;
    let mut worst = 0;
    for _ in 0..50 {
        let w = sampling::random_word(&mut rng, wreath.alphabet(), 30);
        let fact = decompose_full_finite_top(&wreath, &w, None).map_err(|e| e.to_string())?;
        ensure(fact.len() <= bound, || format!("{w}: {} factors > {bound}", fact.len()))?;
        let work = working(&wreath, &fact);
        let target = work.evaluate(&w.translate(work.alphabet()).unwrap()).unwrap();
        check_product(&work, &fact.factors, &target)?;
        worst = worst.max(fact.len());
    }
    Ok(format!("50 words, at most {worst} factors against {bound}"))
}

fn derived_expressions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let a = presets::free(3).alphabet().clone();
    for _ in 0..200 {
        let w = sampling::random_zero_sum_word(&mut rng, &a, 40);
        let pairs = express_in_derived(&w).map_err(|e| e.to_string())?;
        ensure(pairs.len() <= w.len().div_ceil(2), || format!("{w}: {} commutators", pairs.len()))?;
        let product = product_of_commutators(&a, &pairs).unwrap();
        ensure(product.reduce_free() == w.reduce_free(), || format!("{w} is not recovered"))?;
    }
    Ok("200 zero-sum words over F3".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("word laws", 1, word_laws),
        ("abelian reverse", 1, abelian_reverse),
        ("abelian top commutators", 10, abelian_top),
        ("shifted commutators over S3 wr Z", 30, shifted),
        ("derived subgroup over F2 wr S3", 60, derived_finite_top),
        ("oracle against naive enumeration", 60, oracle_exactness),
        ("generating set monotonicity", 30, monotonicity),
        ("quotient push", 10, quotient_push),
        ("full finite top over F2 wr S3", 120, full_finite_top),
        ("commutator expressions", 5, derived_expressions),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => Err(format!("too slow; {detail}")),
            r => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {:>2} {tag} {name}: {:.3}s of {limit}s; {detail}", i + 1, elapsed.as_secs_f64());
        failed += usize::from(result.is_err());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
