use liehodge::cochain::{betti_table, kuga_blocks, BettiConfig, CochainComplex};
use liehodge::lie_core::{catalog, AlgebraSpec, CartanFrame, ModuleRep};
use liehodge::linalg::{max_abs, rel_residual, residual, CMat, C64};

fn corpus() -> Vec<(&'static str, AlgebraSpec, ModuleRep)> {
    let mut out = Vec::new();
    for (name, spec) in [
        ("su2", catalog::su2()),
        ("sl2r", catalog::sl2r()),
        ("h3", catalog::heisenberg()),
        ("abelian3", catalog::abelian(3)),
        ("oscillator", catalog::oscillator()),
        ("affine", catalog::affine()),
    ] {
        out.push((name, spec.clone(), ModuleRep::trivial(spec.dim())));
        out.push((name, spec.clone(), ModuleRep::adjoint(&spec).unwrap()));
    }
    out.push(("su2-spin", catalog::su2(), ModuleRep::spin_half()));
    out.push(("sl2-std", catalog::sl2r(), ModuleRep::sl2_standard()));
    out
}

fn complex(spec: &AlgebraSpec, rep: &ModuleRep) -> CochainComplex {
    let frame = CartanFrame::for_spec(spec).unwrap();
    CochainComplex::new(&frame, rep).unwrap()
}

#[test]
fn d_squared_vanishes() {
    for (name, spec, rep) in corpus() {
        let cx = complex(&spec, &rep);
        assert!(cx.d_squared_residual().unwrap() <= 1e-12, "{name}");
    }
}

#[test]
fn parts_sum_to_d() {
    for (name, spec, rep) in corpus() {
        let cx = complex(&spec, &rep);
        for q in 0..=cx.n() {
            let (a, b) = cx.d_parts(q).unwrap();
            let full = cx.d_full(q).unwrap();
            assert!(residual(&(a.matrix + b.matrix), &full.matrix) <= 1e-14, "{name} q={q}");
        }
    }
}

#[test]
fn closed_form_delta_matches_oracle() {
    for (name, spec, rep) in corpus() {
        let cx = complex(&spec, &rep);
        for q in 0..=cx.n() {
            let (c, w) = cx.delta_parts(q).unwrap();
            let (oc, ow) = cx.delta_oracle_parts(q).unwrap();
            assert!(rel_residual(&c.matrix, &oc.matrix) <= 1e-12, "{name} δ∘ q={q}");
            assert!(rel_residual(&w.matrix, &ow.matrix) <= 1e-12, "{name} δ∧ q={q}");
            let oracle = cx.delta_oracle(q).unwrap();
            assert!(rel_residual(&(c.matrix + w.matrix), &oracle.matrix) <= 1e-10, "{name} q={q}");
        }
    }
}

#[test]
fn clifford_d_wedge_matches_index_formula() {
    for (name, spec, rep) in corpus() {
        let cx = complex(&spec, &rep);
        for q in 0..=cx.n() {
            let a = cx.d_wedge(q).unwrap();
            let b = cx.d_wedge_clifford(q).unwrap();
            assert!(residual(&a.matrix, &b.matrix) <= 1e-13, "{name} q={q}");
        }
    }
}

#[test]
fn closed_components_match_assembly() {
    for (name, spec, rep) in corpus() {
        let cx = complex(&spec, &rep);
        for q in 0..=cx.n() {
            let closed = cx.laplacian_components(q).unwrap();
            let asm = cx.laplacian_components_assembled(q).unwrap();
            let lap = cx.laplacian(q).unwrap();
            assert!(rel_residual(&closed.circ.matrix, &asm.circ.matrix) <= 1e-10, "{name} Δ∘ q={q}");
            assert!(rel_residual(&closed.wedge.matrix, &asm.wedge.matrix) <= 1e-10, "{name} Δ∧ q={q}");
            assert!(rel_residual(&closed.circ_wedge.matrix, &asm.circ_wedge.matrix) <= 1e-10, "{name} Δ∘∧ q={q}");
            assert!(rel_residual(&closed.wedge_circ.matrix, &asm.wedge_circ.matrix) <= 1e-10, "{name} Δ∧∘ q={q}");
            assert!(rel_residual(&closed.sum(), &lap.matrix) <= 1e-10, "{name} Σ q={q}");
            if cx.rep.unitary {
                let u = cx.laplacian_circ_unitary(q).unwrap();
                assert!(rel_residual(&u.matrix, &asm.circ.matrix) <= 1e-10, "{name} Δ∘ unitary q={q}");
            }
        }
    }
}

#[test]
fn reductive_wedge_form_on_semisimple_frames() {
    for spec in [catalog::su2(), catalog::sl2r()] {
        for rep in [ModuleRep::trivial(3), ModuleRep::adjoint(&spec).unwrap()] {
            let cx = complex(&spec, &rep);
            for q in 0..=3 {
                let a = cx.laplacian_wedge_reductive(q).unwrap();
                let b = cx.laplacian_components_assembled(q).unwrap().wedge;
                assert!(rel_residual(&a.matrix, &b.matrix) <= 1e-10, "q={q}");
            }
        }
    }
}

#[test]
fn laplacian_is_psd() {
    for (name, spec, rep) in corpus() {
        let cx = complex(&spec, &rep);
        for q in 0..=cx.n() {
            let lap = cx.laplacian(q).unwrap().matrix;
            let gl = cx.gram(q) * &lap;
            assert!(residual(&gl, &gl.adjoint()) <= 1e-10 * max_abs(&gl).max(1.0), "{name} hermitian q={q}");
            let spec = cx.spectrum(q).unwrap();
            assert!(spec.iter().all(|&e| e >= -1e-10), "{name} q={q} {:?}", spec);
        }
    }
}

#[test]
fn betti_numbers() {
    let cfg = BettiConfig::default();
    let cases: Vec<(AlgebraSpec, Vec<usize>)> = vec![
        (catalog::su2(), vec![1, 0, 0, 1]),
        (catalog::heisenberg(), vec![1, 2, 2, 1]),
        (catalog::abelian(3), vec![1, 3, 3, 1]),
        (catalog::abelian(4), vec![1, 4, 6, 4, 1]),
        (catalog::sl2r(), vec![1, 0, 0, 1]),
    ];
    for (spec, expected) in cases {
        let cx = complex(&spec, &ModuleRep::trivial(spec.dim()));
        let table = betti_table(&cx, &cfg).unwrap();
        let got: Vec<usize> = table.iter().map(|b| b.betti).collect();
        assert_eq!(got, expected, "{:?}", spec.labels);
        assert!(table.iter().all(|b| b.agree), "{:?}", table);
    }
}

#[test]
fn delta0_for_spin_half() {
    let cx = complex(&catalog::su2(), &ModuleRep::spin_half());
    let lap = cx.laplacian(0).unwrap().matrix;
    let expected = CMat::identity(2, 2) * C64::new(0.375, 0.0);
    assert!(residual(&lap, &expected) <= 1e-12);
}

#[test]
fn kuga_sl2() {
    let spec = catalog::sl2r();
    for rep in [ModuleRep::trivial(3), ModuleRep::adjoint(&spec).unwrap()] {
        let cx = complex(&spec, &rep);
        let k = kuga_blocks(&cx).unwrap();
        assert!(k.residual <= 1e-10, "{}", k.residual);
        assert!(k.leakage <= 1e-12);
        eprintln!("printed residual {}", k.printed_residual);
    }
}

#[test]
fn derivation_property() {
    for (spec, rep) in [
        (catalog::su2(), ModuleRep::spin_half()),
        (catalog::sl2r(), ModuleRep::adjoint(&catalog::sl2r()).unwrap()),
        (catalog::heisenberg(), ModuleRep::adjoint(&catalog::heisenberg()).unwrap()),
    ] {
        let cx = complex(&spec, &rep);
        for q in 0..=3 {
            assert!(cx.derivation_check(q).unwrap() <= 1e-12, "q={q}");
        }
    }
}
