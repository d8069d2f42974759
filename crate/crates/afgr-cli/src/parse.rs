//! Argument parsing for the domain types.
//!
//! Syntax:
//! * coweight: `1,0,-1`
//! * finite Weyl element: `e`, `w0`, or 1-based images `2,1,3`
//! * affine Weyl element: `e`, `word:0,1,0`, `t:1,-1`, or `t:1,-1;p:2,1`
//! * affine root: `i,j` ordinary part with a separate `--level`
//! * point list: coweights separated by `;`
//! * cell list: point lists separated by `|`

use afgr::weyl::{AffineWeylElt, Coweight, FiniteWeylElt, Root};

pub fn coweight(s: &str) -> Result<Coweight, String> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|e| format!("bad coweight {:?}: {}", s, e))?;
    Coweight::new(coords).map_err(|e| e.to_string())
}

pub fn usizes(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad index {:?}: {}", t, e))
        })
        .collect()
}

pub fn i64s(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad integer {:?}: {}", t, e))
        })
        .collect()
}

pub fn finite(s: &str, rank: usize) -> Result<FiniteWeylElt, String> {
    match s.trim() {
        "e" | "id" => Ok(FiniteWeylElt::identity(rank)),
        "w0" => Ok(FiniteWeylElt::longest(rank)),
        other => {
            let images = usizes(other)?;
            if images.len() != rank {
                return Err(format!(
                    "permutation {:?} does not match rank {}",
                    s, rank
                ));
            }
            FiniteWeylElt::from_images(images).map_err(|e| e.to_string())
        }
    }
}

pub fn element(s: &str, rank: usize) -> Result<AffineWeylElt, String> {
    let s = s.trim();
    if s == "e" || s == "id" {
        return Ok(AffineWeylElt::identity(rank));
    }
    if let Some(word) = s.strip_prefix("word:") {
        let word = usizes(word)?;
        return AffineWeylElt::from_word(rank, &word).map_err(|e| e.to_string());
    }
    if let Some(rest) = s.strip_prefix("t:") {
        let (trans_str, perm) = match rest.split_once(";p:") {
            Some((t, p)) => (t, finite(p, rank)?),
            None => (rest, FiniteWeylElt::identity(rank)),
        };
        let trans = coweight(trans_str)?;
        if trans.rank() != rank {
            return Err(format!("translation {:?} does not match rank {}", s, rank));
        }
        return AffineWeylElt::new(trans, perm).map_err(|e| e.to_string());
    }
    Err(format!(
        "cannot parse element {:?}: use `e`, `word:0,1`, `t:1,-1` or `t:1,-1;p:2,1`",
        s
    ))
}

pub fn root(s: &str, rank: usize) -> Result<Root, String> {
    let idx = usizes(s)?;
    if idx.len() != 2 {
        return Err(format!("root {:?} must be a pair i,j", s));
    }
    Root::new(rank, idx[0], idx[1]).map_err(|e| e.to_string())
}

pub fn points(s: &str) -> Result<Vec<Coweight>, String> {
    s.split(';').map(coweight).collect()
}

pub fn cells(s: &str) -> Result<Vec<Vec<Coweight>>, String> {
    s.split('|').map(points).collect()
}
