//! The boundary heights T = 0 and T = b, compared with their closed forms.

use harborth::angles::extremal;

fn main() {
    let r = extremal(256).expect("extremal report");
    println!("b       = {}", r.b_decimal);
    println!("|b - ¼√(7−3√5)| ≤ {}", r.b_residual);
    println!("φ(0)    = {:.15}°  closed form {:.15}°", r.phi_at_0, r.phi_at_0_closed);
    println!("φ(b)    = {:.15}°  closed form {:.15}°", r.phi_at_b, r.phi_at_b_closed);
    println!("α(b), β(b) closed forms: {:.12}°, {:.12}°", r.alpha_at_b_closed, r.beta_at_b_closed);
}
