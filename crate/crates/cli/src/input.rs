//! Parsing of permutations, compositions and diagrams from the command line.

use schubkit::diagram::{rothe, skyline};
use schubkit::{Cell, Diagram, Permutation, WeakComposition};

use crate::error::{CliError, CliResult};

pub fn permutation(s: &str) -> CliResult<Permutation> {
    Ok(s.parse()?)
}

pub fn composition(s: &str) -> CliResult<WeakComposition> {
    Ok(s.parse()?)
}

/// Accepts `rothe:<perm>`, `skyline:<comp>`, or an explicit cell list
/// `r,c;r,c;...` optionally prefixed by a grid size `RxC:`.
pub fn diagram(s: &str) -> CliResult<Diagram> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix("rothe:") {
        return Ok(rothe(&permutation(rest)?));
    }
    if let Some(rest) = s.strip_prefix("skyline:") {
        return Ok(skyline(&composition(rest)?));
    }
    let (grid, cells) = match s.split_once(':') {
        Some((g, c)) => (Some(g), c),
        None => (None, s),
    };
    let cells = cells
        .split(';')
        .filter(|t| !t.trim().is_empty())
        .map(cell)
        .collect::<CliResult<Vec<Cell>>>()?;
    match grid {
        None => Ok(Diagram::bounded(cells)),
        Some(g) => {
            let (r, c) = g
                .split_once(['x', 'X'])
                .ok_or_else(|| CliError::Usage(format!("grid size {g:?} is not RxC")))?;
            let r = r.trim().parse().map_err(|_| CliError::Usage(format!("bad row count {r:?}")))?;
            let c = c.trim().parse().map_err(|_| CliError::Usage(format!("bad column count {c:?}")))?;
            Ok(Diagram::from_cells(r, c, cells)?)
        }
    }
}

pub fn cell(s: &str) -> CliResult<Cell> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (r, c) = t.split_once(',').ok_or_else(|| CliError::Usage(format!("cell {s:?} is not r,c")))?;
    let parse = |v: &str| v.trim().parse::<usize>().ok().filter(|&v| v > 0);
    match (parse(r), parse(c)) {
        (Some(r), Some(c)) => Ok((r, c)),
        _ => Err(CliError::Usage(format!("cell {s:?} needs positive coordinates"))),
    }
}
