//! Reproduction of the Möbius-value table: derangement numbers alongside
//! (-1)^n mu(Rees(cube_n, C_(n+1))) and its n · D± factorization.

use anyhow::{ensure, Result};
use rees_core::derange::{derangement_count, signed_derangement_count};
use rees_core::labeling::{mobius_by_compositions, mobius_cube_closed_form, ReesCubeChain};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub derangement: i128,
    /// (-1)^n mu(Rees(cube_n, C_(n+1)))
    pub cube_mobius: i128,
    pub factorization: String,
}

/// Rows 0..=max_n from the closed forms, cross-checked against the poset
/// oracle where that is cheap.
pub fn build_table(max_n: u32) -> Result<Vec<TableRow>> {
    ensure!(max_n <= 18, "table supported up to n = 18 with exact i128 arithmetic");
    let mut rows = Vec::with_capacity(max_n as usize + 1);
    for n in 0..=max_n {
        let closed = mobius_cube_closed_form(n);
        ensure!(
            closed == mobius_by_compositions(n),
            "closed form and composition sum disagree at n = {n}"
        );
        if (1..=3).contains(&n) {
            let oracle = ReesCubeChain::new(n).poset.mobius_bounded()? as i128;
            ensure!(oracle == closed, "poset oracle disagrees with closed form at n = {n}");
        }
        let unsigned = if n % 2 == 0 { closed } else { -closed };
        let factorization = if n == 0 {
            "0".to_string()
        } else {
            format!("{} * {}", n, signed_derangement_count(n - 1))
        };
        rows.push(TableRow { n, derangement: derangement_count(n), cube_mobius: unsigned, factorization });
    }
    Ok(rows)
}

pub fn render_text(rows: &[TableRow]) -> String {
    let mut out = String::from("  n          D_n    (-1)^n mu  factorization\n");
    for r in rows {
        out.push_str(&format!(
            "{:>3} {:>12} {:>12}  {}\n",
            r.n, r.derangement, r.cube_mobius, r.factorization
        ));
    }
    out
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("n,derangement,cube_mobius,factorization\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.derangement, r.cube_mobius, r.factorization));
    }
    out
}

pub fn render_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("table serialization")
}
