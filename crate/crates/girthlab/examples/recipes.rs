//! Replay the explicit generation recipes step by step.
use girthlab::words::{replay_recipe_qt, replay_recipe_sl3_mod3};

fn main() -> girthlab::Result<()> {
    let sl3 = replay_recipe_sl3_mod3(4, 2)?;
    for s in &sl3.steps {
        println!("{:<24} {}", s.label, s.word);
    }
    println!("closure {:?} of {}", sl3.closure_order, sl3.expected_order);

    let qt = replay_recipe_qt(3, 1)?;
    println!("q=3 t=1: {} steps, full={}", qt.steps.len(), qt.generated_full());
    Ok(())
}
