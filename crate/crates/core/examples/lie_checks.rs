//! The so(5) bases, their trace pairings and the invariant 3-form.

use g2forms::suite::{verify_space, Space};

fn main() {
    for r in verify_space(Space::LieChecks) {
        println!("{}", r.render_text());
        if let Some(d) = &r.detail {
            println!("{}", serde_json::to_string_pretty(d).unwrap());
        }
    }
}
