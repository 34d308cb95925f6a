//! End-to-end checks of the worked examples and the randomized batteries.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subst_cli::{run, Command};
use subst_core::classp::{class_p_conjugacy_report, is_class_p};
use subst_core::factors::{phi_map, phi_orbit, PalindromeTree};
use subst_core::morphism::Periodicity;
use subst_core::notation::parse_morphism;
use subst_core::word::{overlap_palindromicity, Letter, Word};
use subst_core::Morphism;

const TM: &str = "0->01;1->10";
const TM2: &str = "0->0110;1->1001";
const FIB: &str = "0->01;1->0";
const PHI: [&str; 7] = [
    "a->babba;b->bab",
    "a->abbab;b->abb",
    "a->bbaba;b->bba",
    "a->babab;b->bab",
    "a->ababb;b->abb",
    "a->babba;b->bba",
    "a->abbab;b->bab",
];

fn parse(spec: &str) -> Morphism {
    parse_morphism(spec).unwrap()
}

fn outcome(command: Command, spec: &str) -> subst_cli::Outcome {
    run(&command, None, spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

fn thue_morse() -> String {
    let tm2 = outcome(Command::ClassP, TM2);
    let c = tm2.report.class_p.as_ref().unwrap();
    assert!(c.cond1 && c.cond2 && c.cond3 && c.cond4 && c.cond5);
    assert_eq!(c.witness.as_deref(), Some("0->0110;1->1001"));
    assert_eq!(c.witness_p.as_deref(), Some(""));

    let start = Instant::now();
    let tm = outcome(Command::ClassP, TM);
    let hks = outcome(Command::Hks, TM);
    let elapsed = start.elapsed();

    let c = tm.report.class_p.as_ref().unwrap();
    assert!(!(c.cond1 || c.cond2 || c.cond3 || c.cond4 || c.cond5), "{c:?}");
    let h = hks.report.hks.as_ref().unwrap();
    assert!(h.palindromic);
    assert_eq!(h.power, 2);
    assert!(elapsed < Duration::from_millis(100), "{elapsed:?}");
    format!("classp and hks on Thue-Morse in {elapsed:?}")
}

fn conjugacy_chain() -> String {
    for spec in PHI {
        let r = outcome(Command::Conjugates, spec).report;
        let c = r.conjugacy.unwrap();
        assert_eq!(c.leftmost, PHI[6], "{spec}");
        assert_eq!(c.rightmost, PHI[0], "{spec}");
        assert_eq!(c.w, "babbab", "{spec}");
    }
    "all seven conjugates agree on the extremes and babbab".into()
}

/// Shifting every image one step right, moving their shared last letter to
/// the front; `None` when the last letters differ.
fn shift_right(images: &[String]) -> Option<Vec<String>> {
    let last = images[0].chars().last()?;
    if !images.iter().all(|w| w.ends_with(last)) {
        return None;
    }
    Some(images.iter().map(|w| format!("{last}{}", &w[..w.len() - 1])).collect())
}

fn witness_construction() -> String {
    let r = outcome(Command::ClassP, PHI[2]).report;
    let c = r.class_p.as_ref().unwrap();

    // From the leftmost conjugate abbab/bab:
    //   1 step: babba/bba   2 steps: ababb/abb   3 steps: babab/bab
    // which is the first with a common palindromic prefix (ε) and
    // palindromic remainders.
    let mut images = vec!["abbab".to_string(), "bab".to_string()];
    let mut trace = Vec::new();
    for _ in 0..3 {
        images = shift_right(&images).unwrap();
        trace.push(images.join("/"));
    }
    assert_eq!(trace, ["babba/bba", "ababb/abb", "babab/bab"]);
    assert_eq!(c.k, 3);
    assert_eq!(c.witness.as_deref(), Some("a->babab;b->bab"));
    assert_eq!(c.witness.as_deref(), Some(PHI[3]));

    let witness = parse(c.witness.as_deref().unwrap());
    let m = is_class_p(&witness, false);
    assert!(m.in_class_p);
    assert_eq!(m.witness_p, Some(Word::empty()));
    assert_eq!(c.witness_p.as_deref(), Some(""));

    let w = &r.conjugacy.as_ref().unwrap().w;
    assert_eq!(w, "babbab");
    assert_eq!(w.chars().rev().collect::<String>(), *w);
    assert!(c.w_palindrome);
    "witness a->babab;b->bab after 3 shifts, p = ε, babbab a palindrome".into()
}

fn markedness() -> String {
    let phi3 = outcome(Command::Conjugates, PHI[2]).report.classification;
    assert_eq!(phi3.marked, Some(true));
    assert_eq!(phi3.well_marked, Some(true));
    let tm = outcome(Command::Conjugates, TM).report.classification;
    assert_eq!(tm.marked, Some(true));
    assert_eq!(tm.well_marked, Some(false));
    assert_eq!(tm.well_marked_power, Some(2));
    "phi3 well-marked, Thue-Morse marked with well-marked power 2".into()
}

fn periodic_ternary() -> String {
    let spec = "a->abcabcab;b->cabca;c->bc";
    let phi = parse(spec);
    let cert = phi.periodicity_certificate(0).unwrap();
    let Periodicity::Periodic { period, power } = cert.kind else { panic!("{cert:?}") };
    assert_eq!(phi.alphabet().render(&period), "abc");
    assert_eq!(power, 5);
    assert_eq!(phi.apply(&period).unwrap(), period.pow(5));

    let h = outcome(Command::Hks, spec).report.hks.unwrap();
    assert!(!h.palindromic);
    let p = h.periodic.unwrap();
    assert_eq!((p.period.as_str(), p.power), ("abc", 5));
    "certificate (abc, 5), not palindromic".into()
}

fn periodic_binary() -> String {
    let spec = "a->aba;b->bab";
    let xi = parse(spec);
    assert!(!xi.is_cyclic());
    let prefix = xi.fixed_point_prefix(0, 1000).unwrap();
    assert_eq!(prefix, Word(vec![0, 1]).pow(500));

    let r = outcome(Command::Analyze { factors: None }, spec).report;
    assert!(!r.classification.cyclic);
    let c = r.class_p.unwrap();
    assert!(c.membership.literal.in_class_p);
    assert!(c.cond2);
    let h = r.hks.unwrap();
    assert!(h.palindromic);
    let p = h.periodic.unwrap();
    assert_eq!(p.period, "ab");
    "acyclic, fixed point (ab)^ω, in class P".into()
}

fn random_spec(rng: &mut ChaCha8Rng) -> String {
    let d = rng.random_range(2..=4usize);
    let letters: Vec<char> = ('a'..).take(d).collect();
    letters
        .iter()
        .map(|&h| {
            let len = rng.random_range(1..=5);
            let img: String = (0..len).map(|_| letters[rng.random_range(0..d)]).collect();
            format!("{h}->{img}")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn lemma_battery() -> String {
    const WANT: usize = 600;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut tested = 0;
    let mut positive = 0;
    while tested < WANT {
        let phi = parse(&random_spec(&mut rng));
        if phi.is_cyclic() {
            continue;
        }
        let r = class_p_conjugacy_report(&phi).unwrap();
        let c = r.conditions();
        assert!(c.iter().all(|&b| b == c[0]), "{phi}: {c:?}");
        positive += c[0] as usize;
        tested += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "{elapsed:?}");
    format!("{tested} acyclic morphisms, {positive} with a class P conjugate, {elapsed:?}")
}

fn random_word(rng: &mut ChaCha8Rng, letters: Letter, len: usize) -> Word {
    Word((0..len).map(|_| rng.random_range(0..letters)).collect())
}

fn random_palindrome(rng: &mut ChaCha8Rng, letters: Letter, max_half: usize) -> Word {
    let len = rng.random_range(0..=max_half);
    let half = random_word(rng, letters, len);
    let mut v = half.0.clone();
    if rng.random_bool(0.5) {
        v.push(rng.random_range(0..letters));
    }
    v.extend(half.0.iter().rev());
    Word(v)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn word_suites() -> String {
    const N: usize = 10_000;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);

    for _ in 0..N {
        let (u, v) = loop {
            let u = random_palindrome(&mut rng, 3, 4);
            let v = random_palindrome(&mut rng, 3, 4);
            if !(u.is_empty() && v.is_empty()) {
                break (u, v);
            }
        };
        let vu = v.concat(&u);
        let l = rng.random_range(0..4);
        for (k, relevant) in [
            (u.len() + v.len().div_ceil(2) + l * vu.len(), v.len()),
            (u.len().div_ceil(2) + l * vu.len(), u.len()),
        ] {
            // a leading letter precedes the palindrome exactly when the length is odd
            let c = vu.right_conjugate(k).unwrap();
            let p = if relevant % 2 == 0 { &c[..] } else { &c[1..] };
            assert!(p.iter().eq(p.iter().rev()), "{vu} by {k}: {c}");
        }
    }

    let mut agreeing = 0;
    for _ in 0..N {
        // half the pairs are palindromes, so that both verdicts occur often
        let (u, v) = if rng.random_bool(0.5) {
            let ulen = rng.random_range(0..5);
            let vlen = rng.random_range(1..5);
            (random_word(&mut rng, 2, ulen), random_word(&mut rng, 2, vlen))
        } else {
            (random_palindrome(&mut rng, 2, 2), random_palindrome(&mut rng, 2, 2))
        };
        if v.is_empty() {
            continue;
        }
        let i = rng.random_range(0..4);
        let x = u.concat(&v);
        let w = x.pow(i).concat(&u);
        let y = v.concat(&u);
        let c = overlap_palindromicity(&x, &w, &y).unwrap();
        assert_eq!([c.ii, c.iii, c.iv], [c.i; 3], "{x} {w} {y}");
        if c.i {
            assert!(c.v);
            agreeing += 1;
        }
        if w.len() >= x.len() {
            assert_eq!(c.v, c.i);
        }
    }

    let mut hypotheses = 0;
    for _ in 0..N {
        let (u, w) = if rng.random_bool(0.5) {
            let len = rng.random_range(1..5);
            let r = random_word(&mut rng, 2, len);
            (r.pow(rng.random_range(1..4)), r.pow(rng.random_range(1..4)))
        } else {
            let a = rng.random_range(1..8);
            let b = rng.random_range(1..8);
            (random_word(&mut rng, 2, a), random_word(&mut rng, 2, b))
        };
        let bound = u.len() + w.len() - gcd(u.len(), w.len());
        let shared = u.pow(bound).iter().zip(w.pow(bound).iter()).take_while(|(a, b)| a == b).count();
        if shared >= bound {
            hypotheses += 1;
            assert_eq!(u.primitive_root().unwrap().0, w.primitive_root().unwrap().0, "{u} {w}");
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "{elapsed:?}");
    format!("3 x {N} instances ({agreeing} palindromic overlaps, {hypotheses} Fine-Wilf hypotheses), {elapsed:?}")
}

fn orbit_completeness() -> String {
    const MAX: usize = 60;
    let mut parts = Vec::new();
    for spec in [TM2, PHI[2]] {
        let phi = parse(spec);
        let orbit = phi_orbit(&phi, MAX, None).unwrap();
        assert!(orbit.misses.is_empty(), "{spec}: {:?}", orbit.misses);
        assert!(orbit.speciality_violations.is_empty(), "{spec}");

        // recompute the orbits from the initial set independently
        let mut reached: HashSet<Word> = HashSet::new();
        for u in &orbit.initial {
            let mut cur = u.clone();
            while cur.len() <= MAX && reached.insert(cur.clone()) {
                cur = phi_map(&phi, &cur).unwrap();
            }
        }
        let long: Vec<&Word> = orbit.bispecials.iter().filter(|u| u.len() > orbit.seed_bound).collect();
        assert!(!long.is_empty());
        for u in &long {
            assert!(reached.contains(*u), "{spec}: {u} not reached");
        }
        parts.push(format!("{spec}: {} bispecials above {}", long.len(), orbit.seed_bound));
    }
    parts.join(", ")
}

/// Distinct palindromes via Manacher radii and double polynomial hashing.
/// At each centre the radii are walked down until an already seen
/// palindrome, whose central sub-palindromes are then known to be seen.
fn distinct_palindromes(s: &[Letter]) -> usize {
    const M1: u64 = 1_000_000_007;
    const M2: u64 = 998_244_353;
    let n = s.len();
    let mut h1 = vec![0u64; n + 1];
    let mut h2 = vec![0u64; n + 1];
    let mut p1 = vec![1u64; n + 1];
    let mut p2 = vec![1u64; n + 1];
    for i in 0..n {
        h1[i + 1] = (h1[i] * 131 + s[i] as u64 + 1) % M1;
        h2[i + 1] = (h2[i] * 137 + s[i] as u64 + 1) % M2;
        p1[i + 1] = p1[i] * 131 % M1;
        p2[i + 1] = p2[i] * 137 % M2;
    }
    let key = |l: usize, r: usize| {
        let a = (h1[r] + M1 * M1 - h1[l] * p1[r - l] % M1) % M1;
        let b = (h2[r] + M2 * M2 - h2[l] * p2[r - l] % M2) % M2;
        (a, b, r - l)
    };

    // radii over the interleaved string #s0#s1#...#
    let t: Vec<i32> = std::iter::once(-1).chain(s.iter().flat_map(|&c| [c as i32, -1])).collect();
    let m = t.len();
    let mut rad = vec![0usize; m];
    let (mut c, mut r) = (0usize, 0usize);
    for i in 0..m {
        let mut k = if i < r { rad[2 * c - i].min(r - i) } else { 0 };
        while i + k + 1 < m && i > k && t[i + k + 1] == t[i - k - 1] {
            k += 1;
        }
        rad[i] = k;
        if i + k > r {
            c = i;
            r = i + k;
        }
    }

    let mut seen = HashSet::new();
    for (i, &k) in rad.iter().enumerate() {
        let mut len = k;
        while len > 0 {
            let l = (i - len) / 2;
            if !seen.insert(key(l, l + len)) {
                break;
            }
            len = len.saturating_sub(2);
        }
    }
    seen.len()
}

/// Every palindromic factor collected as a slice; quadratic, for short texts.
fn distinct_palindromes_naive(s: &[Letter]) -> usize {
    let mut set = HashSet::new();
    for i in 0..s.len() {
        for j in i + 1..=s.len() {
            let f = &s[i..j];
            if f.iter().eq(f.iter().rev()) {
                set.insert(f);
            }
        }
    }
    set.len()
}

fn palindromic_tree() -> String {
    const N: usize = 100_000;
    let mut parts = Vec::new();
    for (name, spec) in [("Thue-Morse", TM), ("Fibonacci", FIB)] {
        let text = parse(spec).fixed_point_prefix(0, N).unwrap();
        assert_eq!(distinct_palindromes(&text[..600]), distinct_palindromes_naive(&text[..600]));

        let start = Instant::now();
        let tree = PalindromeTree::new(&text);
        let elapsed = start.elapsed();
        let expected = distinct_palindromes(&text);
        assert_eq!(tree.len(), expected, "{name}");
        assert!(elapsed < Duration::from_secs(5), "{elapsed:?}");
        parts.push(format!("{name} {expected} in {elapsed:?}"));
    }
    parts.join(", ")
}

fn discrepancy() -> String {
    let c = outcome(Command::ClassP, FIB).report.class_p.unwrap();
    let m = &c.membership;
    assert!(m.literal.in_class_p);
    assert_eq!(m.literal.p.as_deref(), Some("0"));
    assert!(!m.strict.in_class_p);
    assert!(m.discrepancy);

    let h = outcome(Command::Hks, FIB).report.hks.unwrap();
    assert!(h.witness_membership.unwrap().discrepancy);
    "Fibonacci: literal p = 0, strict no, flagged".into()
}

type Criterion = (&'static str, fn() -> String);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Thue-Morse class P and power", thue_morse),
        ("conjugacy chain extremes", conjugacy_chain),
        ("class P witness construction", witness_construction),
        ("markedness", markedness),
        ("periodic ternary certificate", periodic_ternary),
        ("periodic binary case", periodic_binary),
        ("five-condition battery", lemma_battery),
        ("word property suites", word_suites),
        ("bispecial orbit completeness", orbit_completeness),
        ("palindromic tree oracle", palindromic_tree),
        ("membership discrepancy", discrepancy),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match catch_unwind(AssertUnwindSafe(check)) {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
