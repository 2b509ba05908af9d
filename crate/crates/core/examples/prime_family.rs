//! Distinct primes give pairwise non-isomorphic S(p,0,0,0,0,0) over Q.

use ecalg::classify::q_prime_family;
use ecalg::report::{OutputFormat, Render};

fn main() -> ecalg::Result<()> {
    let primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    print!("{}", q_prime_family(&primes)?.render(OutputFormat::Md)?);
    Ok(())
}
