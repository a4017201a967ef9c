//! Retry loop for drawing a fresh target-group commitment.
//!
//! Both the signer and the oracle-programming simulator must redo their
//! final commitment draw if it lands on the group identity or collides
//! with an already-fixed commitment. Against a real backend such a
//! collision has probability ~n/2^253 per draw, so the loop is extracted
//! here where scripted candidate sequences can exercise it.

use crate::backend::GTElement;

pub(crate) const MAX_REDRAWS: usize = 64;

#[derive(Debug)]
pub(crate) enum RetryError<E> {
    Draw(E),
    Exhausted(usize),
}

/// Draws candidates until one is neither the identity nor present in
/// `taken`. Returns the accepted payload, its commitment and the number of
/// attempts used.
pub(crate) fn draw_fresh_commitment<T, E, F>(
    max_attempts: usize,
    taken: &[GTElement],
    mut draw: F,
) -> Result<(T, GTElement, usize), RetryError<E>>
where
    F: FnMut() -> Result<(T, GTElement), E>,
{
    for attempt in 1..=max_attempts {
        let (payload, y) = draw().map_err(RetryError::Draw)?;
        if !y.is_one() && !taken.contains(&y) {
            return Ok((payload, y, attempt));
        }
    }
    Err(RetryError::Exhausted(max_attempts))
}
