//! Greedy search over nearest neighbors, and states far from every
//! stabilizer state.

use num_rational::BigRational;
use stabgeo::census::{amplitude_laws_hold, evading_state, local_search, max_overlap, overlap_to_f64, search_target};
use stabgeo::StabilizerMatrix;

fn main() -> stabgeo::Result<()> {
    for eps in [1, 2] {
        let target = search_target(2, &BigRational::from_integer(eps.into()));
        let path = local_search(&target, &StabilizerMatrix::zero_state(2))?;
        println!("eps = {eps}: {} moves", path.len() - 1);
        for step in &path {
            println!("  overlap {:.4}  {}", overlap_to_f64(&step.overlap), step.state.to_string().replace('\n', " "));
        }
        let (best, at) = max_overlap(&target)?;
        println!("  best possible {:.4} at {}", overlap_to_f64(&best), at.to_string().replace('\n', " "));
    }

    for m in [1, 2] {
        let mu = evading_state(m);
        let (best, _) = max_overlap(&mu)?;
        println!(
            "(|00>+|01>+|10>)^{m}: largest stabilizer overlap {:.4}, passes stabilizer amplitude laws: {}",
            overlap_to_f64(&best),
            amplitude_laws_hold(&mu.normalize_first())
        );
    }
    Ok(())
}
