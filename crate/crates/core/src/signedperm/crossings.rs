use super::SignedPermutation;

/// Number of ordered pairs `(i, j)` of positive indices with
/// `i < j ≤ π_i < π_j`, or `−i < j ≤ −π_i < π_j`, or `i > j > π_i > π_j`.
pub fn crossings(p: &SignedPermutation) -> usize {
    let n = p.len();
    let mut count = 0;
    for i in 1..=n {
        let pi = p.at(i);
        let ii = i as i32;
        for j in 1..=n {
            if i == j {
                continue;
            }
            let pj = p.at(j);
            let jj = j as i32;
            let c1 = ii < jj && jj <= pi && pi < pj;
            let c2 = -ii < jj && jj <= -pi && -pi < pj;
            let c3 = ii > jj && jj > pi && pi > pj;
            if c1 || c2 || c3 {
                count += 1;
            }
        }
    }
    count
}

/// Crossings counted on the arrow diagram of `|π|` (arrow `i → |π_i|`,
/// drawn above the axis when `i ≤ |π_i|`, labeled by the sign of `π_i`) as
/// occurrences of six arrow configurations:
///
/// 1. upper `j → b`, lower `−`-arrow ending at `a` with `j ≤ a < b`;
/// 2. lower `i → a`, upper `−`-arrow starting at `j` with `a < j < i`;
/// 3. upper `j → b` enclosing an upper `−`-arrow `i → a`: `j < i ≤ a < b`;
/// 4. lower `i → a` enclosing a lower `−`-arrow `j → b`: `a < b < j < i`;
/// 5. upper `i → a` and upper `+`-arrow `j → b` with `i < j ≤ a < b`;
/// 6. lower `j → b` and lower `+`-arrow `i → a` with `b < a < j < i`.
pub fn crossings_via_configurations(p: &SignedPermutation) -> usize {
    let n = p.len();
    let arrows: Vec<(usize, usize, bool, bool)> = (1..=n)
        .map(|i| {
            let a = p.at(i).unsigned_abs() as usize;
            (i, a, i <= a, p.at(i) < 0)
        })
        .collect();
    let mut count = 0;
    for &(i, a, upper_i, _) in &arrows {
        for &(j, b, upper_j, neg_j) in &arrows {
            if i == j {
                continue;
            }
            // (i, a) plays the first role, (j, b) the second
            if upper_i && !upper_j && neg_j && i <= b && b < a {
                count += 1;
            }
            if !upper_i && upper_j && neg_j && a < j && j < i {
                count += 1;
            }
            if upper_i && upper_j && neg_j && i < j && j <= b && b < a {
                count += 1;
            }
            if !upper_i && !upper_j && neg_j && a < b && b < j && j < i {
                count += 1;
            }
            if upper_i && upper_j && !neg_j && i < j && j <= a && a < b {
                count += 1;
            }
            if !upper_i && !upper_j && !neg_j && a < b && b < i && i < j {
                count += 1;
            }
        }
    }
    count
}
