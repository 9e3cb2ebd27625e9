//! WebAssembly bindings for the static page in `www/`.
//!
//! Each exported function returns a JSON string; failures come back as
//! `{"error": "..."}` so the page never has to catch exceptions. The plain
//! `*_json` functions hold the logic and are tested natively.

use rrg_core::bijection::TripleDocument;
use rrg_core::enumeration::{count_table, Side};
use rrg_core::qseries::{product_side, t_series};
use rrg_core::{from_triple, to_triple, MoveTriple, Partition};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Above this the brute-force cross-check is skipped (it grows like p(n)).
pub const BRUTE_FORCE_LIMIT: usize = 40;
/// Keeps the grid a sensible size for a browser table.
pub const MAX_QMAX: usize = 120;

fn residue(a: u32) -> Result<u32, String> {
    if (1..=3).contains(&a) {
        Ok(a)
    } else {
        Err(format!("a must be 1, 2 or 3, got {a}"))
    }
}

fn counts(text: &str) -> Result<Vec<u32>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| t.trim().parse().map_err(|_| format!("cannot parse {t:?}"))).collect()
}

fn strings<T: ToString>(cs: &[T]) -> Vec<String> {
    cs.iter().map(T::to_string).collect()
}

/// `λ → (β, μ, ν)` with the full move trace.
pub fn backward_json(a: u32, partition: &str) -> Result<String, String> {
    let a = residue(a)?;
    let lam: Partition = partition.parse().map_err(|e| format!("{e}"))?;
    let (t, trace) = to_triple(a, &lam).map_err(|e| e.to_string())?;
    Ok(TripleDocument::new(&t, lam, Some(trace)).to_json())
}

/// `(β, μ, ν) → λ` with the full move trace.
pub fn forward_json(a: u32, pairs: u32, singletons: u32, mu: &str, nu: &str) -> Result<String, String> {
    let t = MoveTriple { a: residue(a)?, pairs, singletons, mu: counts(mu)?, nu: counts(nu)? };
    let (lam, trace) = from_triple(&t).map_err(|e| e.to_string())?;
    Ok(TripleDocument::new(&t, lam, Some(trace)).to_json())
}

/// Coefficient grid of `T_a` (rows: power of x, columns: power of q), its
/// x=1 row next to the product side, and a brute-force check when small.
pub fn series_json(a: u32, qmax: usize, xmax: usize) -> Result<String, String> {
    let a = residue(a)?;
    if qmax > MAX_QMAX {
        return Err(format!("qmax is capped at {MAX_QMAX} here"));
    }
    let xmax = xmax.min(qmax);
    let s = t_series(a, qmax, xmax);
    let grid: Vec<Vec<String>> = (0..=xmax).map(|x| (0..=qmax).map(|q| s.coeff(x, q).to_string()).collect()).collect();
    let at_one = s.at_x_one();
    let product = product_side(3, a, qmax);
    let brute = if qmax <= BRUTE_FORCE_LIMIT {
        let table = count_table(3, a, Side::Difference, qmax as u32).map_err(|e| e.to_string())?;
        let ok = (0..=qmax).all(|n| (0..=xmax).all(|m| s.coeff(m, n) == table.get(n as u32, m as u32).into()));
        Value::Bool(ok)
    } else {
        Value::Null
    };
    let doc = json!({
        "a": a,
        "qmax": qmax,
        "xmax": xmax,
        "grid": grid,
        "at_x_one": strings(at_one.coeffs()),
        "product": strings(product.coeffs()),
        "product_agrees": xmax == qmax && at_one == product,
        "brute_force_agrees": brute,
    });
    Ok(doc.to_string())
}

fn or_error(r: Result<String, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e }).to_string())
}

#[wasm_bindgen]
pub fn backward(a: u32, partition: &str) -> String {
    or_error(backward_json(a, partition))
}

#[wasm_bindgen]
pub fn forward(a: u32, pairs: u32, singletons: u32, mu: &str, nu: &str) -> String {
    or_error(forward_json(a, pairs, singletons, mu, nu))
}

#[wasm_bindgen]
pub fn series(a: u32, qmax: usize, xmax: usize) -> String {
    or_error(series_json(a, qmax, xmax))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn backward_example() {
        let v = parse(&backward_json(3, "14,14,11,10,7,7,5,5,2,1").unwrap());
        assert_eq!(v["mu"], json!([10, 4, 4]));
        assert_eq!(v["nu"], json!([3, 3, 0, 0]));
        assert_eq!(v["trace"].as_array().unwrap().len(), 15);
    }

    #[test]
    fn forward_example() {
        let v = parse(&forward_json(2, 2, 4, "2,2", "9,6,3,0").unwrap());
        assert_eq!(v["lambda"], json!([17, 13, 9, 6, 6, 4, 4, 1]));
    }

    #[test]
    fn series_grid() {
        let v = parse(&series_json(2, 9, 9).unwrap());
        assert_eq!(v["at_x_one"][9], "10");
        assert_eq!(v["grid"].as_array().unwrap().len(), 10);
        assert_eq!(v["brute_force_agrees"], true);
        assert_eq!(v["product_agrees"], true);
        let v = parse(&series_json(1, 60, 4).unwrap());
        assert_eq!(v["brute_force_agrees"], Value::Null);
        assert_eq!(v["product_agrees"], false);
    }

    #[test]
    fn errors_are_json() {
        for out in [
            backward(4, "1"),
            backward(3, "1,2"),
            backward(1, "1"),
            forward(3, 1, 0, "3", ""),
            series(2, MAX_QMAX + 1, 3),
        ] {
            assert!(parse(&out)["error"].is_string(), "{out}");
        }
    }
}
