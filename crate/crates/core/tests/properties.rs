use proptest::prelude::*;
use proptest::sample::select;

use deutsch_core::gate::format_circuit;
use deutsch_core::optics::{
    compile_circuit_with, compile_gate, emit_layout_file, grid_from_state, parse_layout_file,
    trace, BeamSpot, CompileOptions, CzMounting, LensStage, OpticalLayout,
};
use deutsch_core::quantum::{StateVector, NORM_TOL};
use deutsch_core::toy::{EpistemicState, ToyPermutation};
use deutsch_core::{parse_circuit, Gate};

fn gate() -> impl Strategy<Value = Gate> {
    select(Gate::TWO_QUBIT_INSTANCES.to_vec())
}

fn circuit(max: usize) -> impl Strategy<Value = Vec<Gate>> {
    prop::collection::vec(gate(), 0..=max)
}

fn valid_state() -> impl Strategy<Value = EpistemicState> {
    select(EpistemicState::all_valid(2))
}

fn options() -> impl Strategy<Value = CompileOptions> {
    (0.05f64..100.0, any::<bool>(), any::<bool>()).prop_map(|(pitch_mm, coplanar, flag)| {
        let mut opts = CompileOptions {
            pitch_mm,
            ..CompileOptions::default()
        };
        if coplanar {
            opts.cz_mounting = CzMounting::Coplanar;
        }
        if !flag {
            opts.omit_against = None;
        }
        opts
    })
}

proptest! {
    #[test]
    fn gates_preserve_norm(bits in prop::collection::vec(any::<bool>(), 2..=4), gates in circuit(12)) {
        let mut s = StateVector::init_basis(&bits).unwrap();
        for g in &gates {
            s.apply_gate_mut(g).unwrap();
        }
        prop_assert!((s.norm_sqr() - 1.0).abs() < NORM_TOL);
    }

    #[test]
    fn toy_circuits_keep_states_valid(gates in circuit(10), s in valid_state()) {
        let p = ToyPermutation::from_circuit(&gates, 2).unwrap();
        prop_assert!(p.preserves_validity());
        let out = p.apply(&s).unwrap();
        prop_assert_eq!(p.inverse().apply(&out).unwrap(), s);
    }

    #[test]
    fn compiled_layouts_match_toy(gates in circuit(8), opts in options(), s in valid_state()) {
        let layout = compile_circuit_with(&gates, &opts).unwrap();
        let toy = ToyPermutation::from_circuit(&gates, 2).unwrap();
        prop_assert_eq!(layout.permutation().unwrap(), toy.clone());

        let grid = grid_from_state(&s, opts.pitch_mm).unwrap();
        let out = trace(&layout, &grid);
        prop_assert_eq!(out.active.len(), 4);
        prop_assert_eq!(out.to_state().unwrap(), toy.apply(&s).unwrap());
    }

    #[test]
    fn stages_are_involutions_fixing_their_axis(gates in circuit(4)) {
        let stages: Vec<LensStage> = gates.iter().flat_map(|g| compile_gate(g).unwrap()).collect();
        for stage in &stages {
            for b in BeamSpot::all() {
                prop_assert_eq!(stage.act(stage.act(b)), b);
                if !stage.aperture().contains(b) {
                    prop_assert_eq!(stage.act(b), b);
                }
            }
        }
    }

    #[test]
    fn layout_files_round_trip(gates in circuit(6), opts in options()) {
        let layout = compile_circuit_with(&gates, &opts).unwrap();
        let text = emit_layout_file(&layout);
        prop_assert!(text.is_ascii());
        prop_assert_eq!(parse_layout_file(&text).unwrap(), layout);
    }

    #[test]
    fn circuit_text_round_trips(gates in circuit(10)) {
        // CZ is symmetric, so both wire orders print as `CZ`
        let canonical: Vec<Gate> = gates
            .iter()
            .map(|g| match *g {
                Gate::Cz(..) => Gate::Cz(0, 1),
                other => other,
            })
            .collect();
        prop_assert_eq!(parse_circuit(&format_circuit(&gates)).unwrap(), canonical);
    }
}

fn layout_of(stages: Vec<LensStage>) -> OpticalLayout {
    let mut layout = compile_circuit_with(&[], &CompileOptions::default()).unwrap();
    layout.stages = stages
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.with_stage_index(i as u32))
        .collect();
    layout
}

fn orderings(stages: &[LensStage]) -> Vec<Vec<LensStage>> {
    if stages.len() <= 1 {
        return vec![stages.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..stages.len() {
        let mut rest = stages.to_vec();
        let first = rest.remove(i);
        for mut tail in orderings(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

#[test]
fn stage_order_within_x_and_cz_is_irrelevant() {
    for g in [Gate::X(0), Gate::X(1), Gate::Cz(0, 1)] {
        let stages = compile_gate(&g).unwrap();
        let expected = ToyPermutation::from_gate(&g, 2).unwrap();
        let all = orderings(&stages);
        assert_eq!(all.len(), (1..=stages.len()).product::<usize>());
        for order in all {
            assert_eq!(layout_of(order).permutation().unwrap(), expected, "{g}");
        }
    }
}

#[test]
fn x_commutes_with_cnot_on_the_bench() {
    let cnot = Gate::Cnot {
        control: 0,
        target: 1,
    };
    let opts = CompileOptions::default();
    let a = compile_circuit_with(&[Gate::X(1), cnot], &opts).unwrap();
    let b = compile_circuit_with(&[cnot, Gate::X(1)], &opts).unwrap();
    assert_eq!(a.permutation().unwrap(), b.permutation().unwrap());
}
