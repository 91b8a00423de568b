//! `uqd scan`: queries needed across a logarithmic bias-gap grid.
//!
//! For each gap `eps`, distinguishing `p0 = 1/2` from `p1 = 1/2 + eps`
//! (so `mu_1^2 = 4 eps^2`) takes `t = ceil(log(1/(2 delta)) /
//! -log(1 - 4 eps^2))` queries, which scales as `1/eps^2`.

use uqd_core::discrimination::{
    chernoff_bound, chernoff_information, exact_bayes_error_bernoulli, queries_needed,
};

use super::{pass_fail, CmdResult, OutArgs};
use crate::output::Table;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Smallest bias gap in the grid (grid runs 0.5, 0.2, 0.1, ... down to this)
    #[arg(long, default_value_t = 0.01)]
    pub epsilon: f64,
    /// Target error probability
    #[arg(long, default_value_t = 0.05)]
    pub delta: f64,
    #[command(flatten)]
    pub out: OutArgs,
}

/// Descending 1-2-5 grid from 0.5 down to `floor`.
fn gap_grid(floor: f64) -> Vec<f64> {
    let mut grid = Vec::new();
    let mut decade = 0.1;
    'outer: loop {
        for lead in [5.0, 2.0, 1.0] {
            let v = lead * decade;
            if v > 0.5 * (1.0 + 1e-12) {
                continue;
            }
            if v < floor * (1.0 - 1e-12) {
                break 'outer;
            }
            grid.push(v);
        }
        decade /= 10.0;
        if decade < 1e-9 {
            break;
        }
    }
    grid
}

pub fn run(args: &Args) -> CmdResult {
    let mut table = Table::new(vec!["epsilon", "t_needed", "exact_error_at_t", "bound_at_t"]);
    let mut all_within_target = true;
    for eps in gap_grid(args.epsilon) {
        let t = queries_needed(eps, args.delta)?;
        let mu1_sq = 4.0 * eps * eps;
        let exact = exact_bayes_error_bernoulli(0.0, mu1_sq, t as u32)?;
        let xi = chernoff_information(0.0, mu1_sq)?.xi;
        let bound = chernoff_bound(t as u32, xi);
        all_within_target &= exact <= args.delta + 1e-15;
        table.push(vec![eps.into(), t.into(), exact.into(), bound.into()]);
        eprintln!("eps={eps:<8} t={t:<8} exact={exact:.6e} bound={bound:.6e}");
    }
    args.out.emit(&table.render(args.out.format))?;
    Ok(pass_fail(all_within_target))
}

#[cfg(test)]
mod tests {
    use super::gap_grid;

    #[test]
    fn grid_is_descending_one_two_five() {
        assert_eq!(gap_grid(0.01), vec![0.5, 0.2, 0.1, 0.05, 0.02, 0.01]);
        assert_eq!(gap_grid(0.5), vec![0.5]);
    }
}
