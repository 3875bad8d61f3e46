//! Fuzz the acyclicity checker against brute force on random complexes.
//!
//! A discrete Morse matching is usable only if its modified face relation
//! has no directed cycle. `find_cycle` runs a linear-time path search;
//! `exhaustive_vpath_cycle` walks every alternating path the slow way.
//! The two must agree on every input. An acyclic matching executes as a
//! sequence of free-face removals exactly when its critical cells form a
//! subcomplex; the executor itself enforces that precondition.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homcollapse::morse::{exhaustive_vpath_cycle, greedy_matching, random_complex};
use homcollapse::Error;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let rounds = 300;
    let mut collapsed = 0;
    let mut ragged = 0;
    let mut cyclic = 0;
    for round in 0..rounds {
        let cx = random_complex(&mut rng, 8);
        let m = greedy_matching(&cx, &mut rng);
        m.validate(&cx).unwrap();

        let fast = m.find_cycle(&cx).unwrap();
        let slow = exhaustive_vpath_cycle(&m);
        assert_eq!(fast.is_some(), slow, "round {round}: checkers disagree");

        if fast.is_some() {
            cyclic += 1;
            continue;
        }
        // A pair with the empty simplex survives as residue; every other
        // pair must execute as one elementary collapse, unless the
        // critical cells fail to form a subcomplex.
        match m.collapse_sequence(&cx) {
            Ok(collapse) => {
                collapsed += 1;
                let geometric = m.len() - usize::from(m.empty_partner().is_some());
                assert_eq!(collapse.steps.len(), geometric);
            }
            Err(Error::InvalidMatching(_)) => ragged += 1,
            Err(e) => panic!("round {round}: acyclic matching failed to collapse: {e}"),
        }
    }
    println!(
        "{rounds} random matchings: {cyclic} cyclic, {collapsed} collapsed cleanly, \
         {ragged} acyclic with ragged critical cells; checkers agree throughout"
    );
}
