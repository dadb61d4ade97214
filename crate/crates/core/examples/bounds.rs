//! Degree–diameter bound calculators.
//!
//! Run with `cargo run --example bounds`.

use surfsep::bounds::{bounds_report, eq2_lower, moore, params_ell_c, thm_main_upper, Parity};

fn main() {
    println!("M(3,2) = {}, M(10,2) = {}", moore(3, 2).unwrap(), moore(10, 2).unwrap());
    for g in [0, 1, 2, 8, 100] {
        let even = params_ell_c(g, Parity::Even);
        let odd = params_ell_c(g, Parity::Odd);
        println!(
            "g = {g}: even (ℓ, c) = ({}, {}), odd (ℓ, c) = ({}, {})",
            even.ell, even.c, odd.ell, odd.c
        );
    }
    println!("upper bound (g=0, Δ=10, k=2): {}", thm_main_upper(0, 10, 2).unwrap());
    println!("upper bound (g=3, Δ=50, k=6): {}", thm_main_upper(3, 50, 6).unwrap());
    println!("lower bound (g=2, Δ=10, k=5, p=7): {}", eq2_lower(2, 10, 5, 7).unwrap());
    println!("\n{}", bounds_report(2, 10, 5).unwrap().to_json());
}
