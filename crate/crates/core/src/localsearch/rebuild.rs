use super::dp::OptResult;
use super::reduced::{build_reduced, ReducedSolution};
use crate::error::{Error, Result};
use crate::model::{validate, Container, Move, Solution};

/// Splices an `OPT(n)` schedule back into `sol`.
///
/// The new move list is: for each step `t` of `S^-n`, the scheduled
/// relocations of `n` before `t` followed by step `t`; then the retrieval of
/// `n`; then every move after the original retrieval of `n`, unchanged.
pub fn rebuild(sol: &Solution, n: Container, res: &OptResult) -> Result<Solution> {
    let red = build_reduced(sol, n)?;
    rebuild_from(&red, sol, res)
}

pub(crate) fn rebuild_from(red: &ReducedSolution, sol: &Solution, res: &OptResult) -> Result<Solution> {
    if res.container != red.container() {
        return Err(Error::Inconsistent(format!(
            "result for container {} applied to container {}",
            res.container,
            red.container()
        )));
    }
    let m = red.config_count();
    let mut moves = Vec::with_capacity(sol.moves().len());
    let mut at = red.start().0;
    let mut pending = res.schedule.iter().peekable();
    for t in 1..m {
        while let Some(r) = pending.next_if(|r| r.before_step == t) {
            moves.push(Move::Relocate { from: at, to: r.to });
            at = r.to;
        }
        moves.push(red.step(t));
    }
    if let Some(r) = pending.next() {
        return Err(Error::Inconsistent(format!(
            "relocation scheduled before step {} of {} steps",
            r.before_step,
            m - 1
        )));
    }
    moves.push(Move::Retrieve { from: at });
    moves.extend_from_slice(&sol.moves()[red.retrieval_index() + 1..]);

    let rebuilt = Solution::new(sol.instance().clone(), moves);
    let report = validate(&rebuilt);
    if !report.is_ok() {
        return Err(Error::Inconsistent(report.description()));
    }
    Ok(rebuilt)
}
