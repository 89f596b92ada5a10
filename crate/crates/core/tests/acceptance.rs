//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::process::ExitCode;

use equisig::algebra::{connect_sum, mirror};
use equisig::catalog::{self, regions_7_4b_minus, Direction};
use equisig::diagram::{load, SymmetricDiagram};
use equisig::invariant::{alternating_fast_path, analyze, butterfly_lower_bound, sigma_tilde};
use equisig::linalg::{signature, signature_oracle, SymIntMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn st(d: &SymmetricDiagram) -> Result<i64, String> {
    sigma_tilde(d).map(|r| r.sigma_tilde).map_err(|e| e.to_string())
}

// printed Goeritz matrix, rows and columns a b c d a' b' c' d'
const PRINTED_G: [[i64; 8]; 8] = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 0, 1],
    [0, 0, 0, 0, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 1, 0, 0, -1, 1],
];
const PRINTED_M_PLUS: [[i64; 4]; 4] = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 4, -2], [0, 0, -2, 0]];
const PRINTED_M_MINUS: [[i64; 4]; 4] = [[4, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 4, -2], [0, 0, -2, 4]];

fn rows<const N: usize>(m: &[[i64; N]; N]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

fn criterion_1() -> Check {
    let d = catalog::build_7_4(Direction::Plus);
    expect_eq("fast path", alternating_fast_path(&d).map_err(|e| e.to_string())?, -6)?;
    expect_eq("pipeline", st(&d)?, -6)
}

fn criterion_2() -> Check {
    let d = catalog::build_7_4(Direction::Minus);
    let a = analyze(&d).map_err(|e| e.to_string())?;
    expect_eq("unshaded regions", a.faces.shading.unshaded_faces().len(), 9)?;
    let labels = regions_7_4b_minus();
    let mut index = Vec::new();
    for l in &labels {
        let face = a.faces.complex.face_of(l.segment, l.side);
        let k = a
            .goeritz
            .index_of(face)
            .ok_or_else(|| format!("region {} is not in the Goeritz basis", l.label))?;
        index.push(k);
    }
    let g = a.goeritz.matrix.to_i64_rows().unwrap();
    let relabelled: Vec<Vec<i64>> = index
        .iter()
        .map(|&i| index.iter().map(|&j| g[i][j]).collect())
        .collect();
    expect_eq("Goeritz matrix", relabelled, rows(&PRINTED_G))?;
    expect_eq("M+", a.m_plus.to_i64_rows().unwrap(), rows(&PRINTED_M_PLUS))?;
    expect_eq("M-", a.m_minus.to_i64_rows().unwrap(), rows(&PRINTED_M_MINUS))?;
    // restricted forms of the printed matrix itself, read independently
    let printed = SymIntMatrix::from_i64_rows(&rows(&PRINTED_G)).unwrap();
    let plus: Vec<Vec<i64>> = (0..4).map(|k| (0..8).map(|i| [1, -1][i / 4] * i64::from(i % 4 == k)).collect()).collect();
    let minus: Vec<Vec<i64>> = (0..4).map(|k| (0..8).map(|i| i64::from(i % 4 == k)).collect()).collect();
    let sp = signature_oracle(&printed.restrict(&plus)).unwrap().signature();
    let sm = signature_oracle(&printed.restrict(&minus)).unwrap().signature();
    expect_eq("sigma(E+) of printed matrix", sp, 2)?;
    expect_eq("sigma(E-) of printed matrix", sm, 4)?;
    expect_eq("sigma(E+)", a.report.intermediates.plus_signature.signature(), 2)?;
    expect_eq("sigma(E-)", a.report.intermediates.minus_signature.signature(), 4)?;
    expect_eq("gsig", a.report.gsig, -2)?;
    expect_eq("e", a.report.e, 8)?;
    expect_eq("sigma_tilde", a.report.sigma_tilde, -10)
}

fn criterion_3() -> Check {
    for n in 1..=10usize {
        let d = catalog::build_torus_2_odd(n).map_err(|e| e.to_string())?;
        let want = -2 * n as i64;
        expect_eq(&format!("T(2,{}) fast path", 2 * n + 1), alternating_fast_path(&d).map_err(|e| e.to_string())?, want)?;
        expect_eq(&format!("T(2,{}) pipeline", 2 * n + 1), st(&d)?, want)?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let plus = catalog::build_7_4(Direction::Plus);
    let minus = catalog::build_7_4(Direction::Minus);
    let sum = connect_sum(&plus, &mirror(&minus)).map_err(|e| e.to_string())?;
    expect_eq("crossings of the sum", sum.n(), plus.n() + minus.n())?;
    expect_eq("sigma_tilde(7_4b+ # m7_4b-)", st(&sum)?, 4)?;
    if st(&plus)? == st(&minus)? {
        return Err("the two directions of 7_4b are not distinguished".into());
    }
    Ok(())
}

fn criterion_5() -> Check {
    let files = ["trefoil.json", "trefoil_kinks.json", "trefoil_r2.json"];
    let mut seen: Vec<SymmetricDiagram> = Vec::new();
    for f in files {
        let d = load(&common::corpus(f)).map_err(|e| format!("{f}: {e}"))?;
        if seen.iter().any(|s| s.crossings() == d.crossings()) {
            return Err(format!("{f} repeats an earlier diagram"));
        }
        expect_eq(f, st(&d)?, -2)?;
        seen.push(d);
    }
    Ok(())
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for case in 0..1000 {
        let d = common::random_diagram(&mut rng);
        common::check_diagram_properties(&d).map_err(|e| format!("random diagram {case}: {e}"))?;
    }
    for case in 0..1000 {
        let dim = rng.gen_range(0..=8);
        let m = common::random_symmetric(&mut rng, dim, 9);
        let s = signature(&m);
        expect_eq(&format!("oracle, matrix {case}"), signature_oracle(&m).unwrap(), s)?;
        let u = common::random_unimodular(&mut rng, dim);
        expect_eq(&format!("unimodular congruence, matrix {case}"), signature(&m.congruent(&u)), s)?;
    }
    let diagrams = common::catalog_diagrams();
    let values: Vec<i64> = diagrams.iter().map(st).collect::<Result<_, _>>()?;
    for (d, &v) in diagrams.iter().zip(&values) {
        expect_eq(&format!("mirror of {}", d.name()), st(&mirror(d))?, -v)?;
    }
    for (d1, &v1) in diagrams.iter().zip(&values) {
        for (d2, &v2) in diagrams.iter().zip(&values) {
            let sum = connect_sum(d1, d2).map_err(|e| e.to_string())?;
            expect_eq(&format!("{} # {}", d1.name(), d2.name()), st(&sum)?, v1 + v2)?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    let bound = |d: &SymmetricDiagram| -> Result<i64, String> {
        let r = sigma_tilde(d).map_err(|e| e.to_string())?;
        expect_eq("bg4_lower field", r.bg4_lower, butterfly_lower_bound(r.sigma_tilde))?;
        Ok(r.bg4_lower)
    };
    expect_eq("7_4b+", bound(&catalog::build_7_4(Direction::Plus))?, 3)?;
    expect_eq("7_4b-", bound(&catalog::build_7_4(Direction::Minus))?, 5)?;
    for n in 1..=10usize {
        let d = catalog::build_torus_2_odd(n).map_err(|e| e.to_string())?;
        expect_eq(&format!("T(2,{})", 2 * n + 1), bound(&d)?, n as i64)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("1 7_4b+ equivariant signature -6 by fast path and pipeline", criterion_1),
        ("2 7_4b- Goeritz matrix, sigma(E+)=2, sigma(E-)=4, gsig=-2, e=8, sigma_tilde=-10", criterion_2),
        ("3 T(2,2n+1) gives -2n for n=1..10 by fast path and pipeline", criterion_3),
        ("4 7_4b+ # m7_4b- gives 4", criterion_4),
        ("5 three trefoil diagrams all give -2", criterion_5),
        ("6 seeded property suite", criterion_6),
        ("7 butterfly genus lower bounds 3, 5, n", criterion_7),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  criterion {name}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
