//! The integers `p^{(r,m)}` attached to a Serre degree `M`.

/// `p^{(0,m)} = -1`, `p^{(r,m)} = 0` for `r > m/2`, and
/// `p^{(r,m)} = p^{(r,m-1)} + (m-1)(M+1-m) p^{(r-1,m-2)}` otherwise.
pub fn p_coeff(big_m: i64, r: usize, m: usize) -> i64 {
    let mut memo = vec![vec![None; m + 1]; r + 1];
    p_rec(big_m, r, m, &mut memo)
}

fn p_rec(big_m: i64, r: usize, m: usize, memo: &mut Vec<Vec<Option<i64>>>) -> i64 {
    if r == 0 {
        return -1;
    }
    if r > m / 2 {
        return 0;
    }
    if let Some(v) = memo[r][m] {
        return v;
    }
    let mm = m as i64;
    let v = p_rec(big_m, r, m - 1, memo) + (mm - 1) * (big_m + 1 - mm) * p_rec(big_m, r - 1, m - 2, memo);
    memo[r][m] = Some(v);
    v
}
