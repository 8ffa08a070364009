//! One line per acceptance criterion. Criterion 9 is exploratory.

use std::time::Instant;

use ladderlab::clasp::{
    alt_decomposition_holds, clasp_oracle, conjecture_sweep, gamma, lowering_weights, recursive1_check, sweep_pairs,
    validate_clasp, ClaspEngine,
};
use ladderlab::eval::{eval_ladder, hom_rank, registry, sweep_relation, triangularity_report, TensorBasis};
use ladderlab::qring::RatFun;
use ladderlab::webs::{Ladder, Rung};
use ladderlab::weights::{GlWeight, SlWeight};

/// Range of the kappa tables: (n, level bound).
const RANGE: [(usize, i64); 3] = [(2, 8), (3, 5), (4, 3)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn ratio(nums: &[i64], dens: &[i64]) -> RatFun {
    RatFun::qint_ratio(nums, dens).unwrap()
}

fn eq(a: &RatFun, b: &RatFun) -> bool {
    a.sub(b).is_zero()
}

/// The closed forms tabulated for n = 2, 3, 4.
fn table(lambda: &SlWeight, mu: &GlWeight) -> Option<RatFun> {
    let c = lambda.coords();
    let f = |pairs: &[i64]| {
        let nums: Vec<i64> = pairs.to_vec();
        let dens: Vec<i64> = pairs.iter().map(|x| x - 1).collect();
        ratio(&nums, &dens)
    };
    let v = match (c, mu.to_string().as_str()) {
        (_, "10" | "100" | "110" | "1000" | "1100" | "1110") => RatFun::one(),
        (&[b], "01") => f(&[b + 1]),
        (&[b, _], "010") => f(&[b + 1]),
        (&[b, c], "001") => f(&[c + 1, b + c + 2]),
        (&[_, c], "101") => f(&[c + 1]),
        (&[b, c], "011") => f(&[b + 1, b + c + 2]),
        (&[b, _, _], "0100") => f(&[b + 1]),
        (&[b, c, _], "0010") => f(&[c + 1, b + c + 2]),
        (&[b, c, d], "0001") => f(&[d + 1, c + d + 2, b + c + d + 3]),
        (&[_, c, _], "1010") => f(&[c + 1]),
        (&[_, c, d], "1001") => f(&[d + 1, c + d + 2]),
        (&[b, c, _], "0110") => f(&[b + 1, c + b + 2]),
        (&[b, c, d], "0101") => f(&[b + 1, d + 1, b + c + d + 3]),
        (&[b, c, d], "0011") => f(&[c + 1, c + d + 2, c + b + 2, b + c + d + 3]),
        (&[_, _, d], "1101") => f(&[d + 1]),
        (&[_, c, d], "1011") => f(&[c + 1, c + d + 2]),
        (&[b, c, d], "0111") => f(&[b + 1, b + c + 2, b + c + d + 3]),
        _ => return None,
    };
    Some(v)
}

fn relations() -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    for n in 2..=4 {
        for rel in registry() {
            let r = sweep_relation(rel.as_ref(), n).unwrap();
            checked += r.checked;
            bad.extend(r.failures.iter().map(|f| format!("{} n={n} {f}", r.relation)));
        }
    }
    ok(bad.is_empty(), format!("{checked} instances, {} failures {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn tables(e: &ClaspEngine) -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    for (n, bound) in RANGE {
        for (l, m) in sweep_pairs(n, bound) {
            checked += 1;
            let want = table(&l, &m).expect("tabulated");
            match e.kappa_matrix(&l, &m) {
                Ok(k) if eq(&k, &want) => {}
                Ok(k) => bad.push(format!("({l}, {m}): {k} vs {want}")),
                Err(err) => bad.push(format!("({l}, {m}): {err}")),
            }
        }
    }
    ok(bad.is_empty(), format!("{checked} values, {} mismatches {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn triple(e: &ClaspEngine) -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    for (n, bound) in RANGE {
        let r = conjecture_sweep(e, n, bound, 1).unwrap();
        checked += r.checked;
        bad.extend(r.rows.iter().filter(|r| !r.agree).map(|r| format!("n={} ({}, {})", r.n, r.lambda, r.mu)));
    }
    ok(bad.is_empty(), format!("{checked} triples, {} disagreements {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn clasps(e: &ClaspEngine) -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    for (n, bound) in RANGE {
        for l in SlWeight::dominant_up_to(n, bound + 1) {
            checked += 1;
            let r = validate_clasp(e, &l).unwrap();
            bad.extend(r.failures.iter().map(|f| format!("n={n} {l}: {f}")));
        }
    }
    let mut oracles = 0;
    for (n, bound) in [(2, 4), (3, 4), (4, 2)] {
        for l in SlWeight::dominant_up_to(n, bound) {
            oracles += 1;
            match clasp_oracle(&l) {
                Ok(o) if o.m == e.clasp(&l).unwrap().matrix.m => {}
                Ok(_) => bad.push(format!("n={n} {l}: oracle differs")),
                Err(err) => bad.push(format!("n={n} {l}: oracle {err}")),
            }
        }
    }
    ok(
        bad.is_empty(),
        format!("{checked} clasps validated, {oracles} oracle solves, {} failures {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()),
    )
}

fn regressions(e: &ClaspEngine) -> Outcome {
    let mut bad = Vec::new();
    // P_{m+1} = P_m (x) 1 - [m]/[m+1] (P_m (x) 1) U (P_m (x) 1), U the cup-cap on the last two strands
    for m in 1..=8i64 {
        let pm = e.clasp(&SlWeight::new(vec![m])).unwrap().matrix.tensor_id(1).unwrap();
        let u = Ladder::new(2, vec![1; m as usize + 1], vec![Rung::ne(m as usize - 1, 1), Rung::nw(m as usize - 1, 1)]).unwrap();
        let u = eval_ladder(&u).to_ratfun();
        let term = pm.compose(&u).unwrap().compose(&pm).unwrap();
        let rhs = pm.m.sub(&term.m.scale(&ratio(&[m], &[m + 1]))).unwrap();
        if rhs != e.clasp(&SlWeight::new(vec![m + 1])).unwrap().matrix.m {
            bad.push(format!("sl2 m={m}"));
        }
        let k = e.kappa_matrix(&SlWeight::new(vec![m]), &"01".parse().unwrap()).unwrap();
        if !eq(&k, &ratio(&[m + 1], &[m])) {
            bad.push(format!("sl2 kappa m={m}"));
        }
    }
    // reciprocal kappas in the sl3 expansions through omega_1 and omega_2
    let mut cases = 0;
    for s in 0..=4i64 {
        for m in 0..=s {
            let nn = s - m;
            let l = SlWeight::new(vec![m, nn]);
            let coeffs: [(&str, bool, RatFun); 4] = [
                ("010", m > 0, ratio(&[m], &[m + 1])),
                ("001", nn > 0, ratio(&[nn, m + nn + 1], &[nn + 1, m + nn + 2])),
                ("101", nn > 0, ratio(&[nn], &[nn + 1])),
                ("011", m > 0, ratio(&[m, m + nn + 1], &[m + 1, m + nn + 2])),
            ];
            for (mu, defined, c) in coeffs {
                if !defined {
                    continue;
                }
                cases += 1;
                let k = e.kappa_matrix(&l, &mu.parse().unwrap()).unwrap();
                if !eq(&k.inv().unwrap(), &c) {
                    bad.push(format!("sl3 ({m},{nn}) {mu}"));
                }
            }
            for a in 1..=2 {
                cases += 1;
                if !alt_decomposition_holds(e, &l, a).unwrap() {
                    bad.push(format!("sl3 ({m},{nn}) expansion through omega_{a}"));
                }
            }
        }
    }
    ok(bad.is_empty(), format!("8 sl2 clasps, {cases} sl3 checks, failures {bad:?}"))
}

fn words(n: usize, width: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..width {
        out = out.iter().flat_map(|w| (1..n as u8).map(move |a| [w.as_slice(), &[a]].concat())).collect();
        all.extend(out.clone());
    }
    all
}

fn tensor_dim(n: usize, w: &[u8]) -> usize {
    TensorBasis::new(n, &w.iter().map(|&a| a as u32).collect::<Vec<_>>()).unwrap().size()
}

fn hom_ranks() -> Outcome {
    let (mut pairs, mut bad) = (0, Vec::new());
    for n in 2..=4 {
        let ws: Vec<Vec<u8>> = words(n, 4).into_iter().filter(|w| n < 4 || w.len() <= 3 || tensor_dim(n, w) <= 500).collect();
        for s in &ws {
            for t in &ws {
                pairs += 1;
                let r = hom_rank(n, s, t, 3, 11).unwrap();
                if !r.certified {
                    bad.push(format!("n={n} {s:?} -> {t:?}: rank {} of {}", r.rank, r.count));
                }
            }
        }
    }
    ok(bad.is_empty(), format!("{pairs} pairs, {} uncertified {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn triangularity() -> Outcome {
    let (mut count, mut failing, mut violations) = (0, 0, 0);
    let mut first = None;
    for n in 2..=4 {
        for w in words(n, 4) {
            count += 1;
            let r = triangularity_report(n, &w).unwrap();
            if !r.passed() {
                failing += 1;
                violations += r.failures.len();
                first.get_or_insert_with(|| format!("n={n} {w:?}: {}", r.failures[0]));
            }
        }
    }
    ok(failing == 0, format!("{count} words, {failing} failing, {violations} violations; first {}", first.unwrap_or_default()))
}

fn gammas(e: &ClaspEngine) -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    let g = |s: &str| -> GlWeight { s.parse().unwrap() };
    for (n, bound) in RANGE {
        for (l, m) in sweep_pairs(n, bound) {
            if m.is_highest() {
                continue;
            }
            let d = m.elementary_data();
            let xk = d.x[d.k - 1];
            let lm = l.minus_fundamental(xk);
            for nu in GlWeight::level(n, xk) {
                if !lm.add_gl(&nu).is_dominant() {
                    continue;
                }
                let want = if nu.is_highest() {
                    Some(RatFun::one())
                } else if m == g("0101") && nu == g("0111") {
                    Some(ratio(&[l.get(1) + 1], &[l.get(1)]))
                } else if m == g("0101") && nu == g("1101") {
                    Some(RatFun::one())
                } else {
                    None
                };
                let Some(want) = want else { continue };
                checked += 1;
                match gamma(e, &l, &m, &nu) {
                    Ok(v) if eq(&v, &want) => {}
                    Ok(v) => bad.push(format!("gamma({l}, {m}, {nu}) = {v}, expected {want}")),
                    Err(err) => bad.push(format!("gamma({l}, {m}, {nu}): {err}")),
                }
            }
            checked += 1;
            match recursive1_check(e, &l, &m) {
                Ok(r) if r.holds => {}
                Ok(r) => bad.push(format!("recursion at ({l}, {m}): {} vs {}", r.lhs, r.rhs)),
                Err(err) => bad.push(format!("recursion at ({l}, {m}): {err}")),
            }
        }
    }
    let _ = lowering_weights;
    ok(bad.is_empty(), format!("{checked} checks, {} failures {:?}", bad.len(), bad.iter().take(3).collect::<Vec<_>>()))
}

fn exploratory(e: &ClaspEngine) -> Outcome {
    let r = conjecture_sweep(e, 5, 2, 1).unwrap();
    let bad: Vec<String> = r.rows.iter().filter(|r| !r.agree).map(|r| format!("({}, {}): {} vs {}", r.lambda, r.mu, r.kappa_matrix, r.kappa_conjecture)).collect();
    if !bad.is_empty() {
        println!("!! n=5 disagreement between matrix and product formula: {bad:?}");
    }
    ok(bad.is_empty(), format!("n=5 level 2: {} pairs, {} disagreements", r.checked, bad.len()))
}

fn main() {
    let engine = ClaspEngine::new();
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "relation suite", Box::new(relations)),
        (3, "kappa triple agreement", Box::new(|| triple(&engine))),
        (2, "kappa tables", Box::new(|| tables(&engine))),
        (4, "clasp validity", Box::new(|| clasps(&engine))),
        (5, "Jones-Wenzl and sl3 expansions", Box::new(|| regressions(&engine))),
        (6, "hom ranks", Box::new(hom_ranks)),
        (7, "triangularity", Box::new(triangularity)),
        (8, "gamma regression", Box::new(|| gammas(&engine))),
        (9, "exploratory n=5 sweep", Box::new(|| exploratory(&engine))),
    ];
    let mut lines = Vec::new();
    for (id, name, run) in criteria {
        let t = Instant::now();
        let o = run();
        let line = format!(
            "criterion {id}: {} {name}{} ({}) [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            if id == 9 { " (non-gating)" } else { "" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
        println!("{line}");
        lines.push((id, o.pass, line));
    }
    lines.sort_by_key(|l| l.0);
    let gating: Vec<_> = lines.iter().filter(|l| l.0 != 9).collect();
    let passed = gating.iter().filter(|l| l.1).count();
    println!("summary: {passed}/{} gating criteria pass", gating.len());
    for l in gating.iter().filter(|l| !l.1) {
        println!("  failing: criterion {}", l.0);
    }
}
