use crate::error::GenError;
use crate::graph::Graph;
use crate::sign::Sign;
use crate::signed::SignedGraph;

/// Strictly increasing `k`-sequences over `1..=n`, lexicographic.
pub fn shift_sequences(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn extend(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let from = cur.last().map_or(1, |&x| x + 1);
        for x in from..=n {
            cur.push(x);
            extend(k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(k, n, &mut Vec::with_capacity(k), &mut out);
    out
}

fn shift_adjacent(a: &[usize], b: &[usize]) -> bool {
    a[1..] == b[..b.len() - 1]
}

/// The shift graph `S_{k,n}`: increasing `k`-sequences, `(s1..sk)` adjacent to
/// `(s2..sk+1)`. Vertex `i` is the `i`-th sequence of [`shift_sequences`].
pub fn gen_shift(k: usize, n: usize) -> Result<Graph, GenError> {
    if k == 0 || k > n {
        return Err(GenError::BadParams(format!("shift graph needs 1 <= k <= n, got k={k}, n={n}")));
    }
    let seqs = shift_sequences(k, n);
    let edges = (0..seqs.len()).flat_map(|i| (i + 1..seqs.len()).map(move |j| (i, j)));
    let edges: Vec<_> = edges
        .filter(|&(i, j)| shift_adjacent(&seqs[i], &seqs[j]) || shift_adjacent(&seqs[j], &seqs[i]))
        .collect();
    Ok(Graph::new(seqs.len(), edges)?)
}

/// The signed shift graph: `S_{3,n}` with negative edges, plus a positive edge
/// between every two triples with the same middle value.
pub fn gen_signed_shift3(n: usize) -> Result<SignedGraph, GenError> {
    if n < 3 {
        return Err(GenError::BadParams(format!("signed shift graph needs n >= 3, got {n}")));
    }
    let seqs = shift_sequences(3, n);
    let shift = gen_shift(3, n)?;
    let mut edges: Vec<(usize, usize, Sign)> = shift.edges().map(|(u, v)| (u, v, Sign::Negative)).collect();
    for i in 0..seqs.len() {
        for j in i + 1..seqs.len() {
            if seqs[i][1] == seqs[j][1] {
                edges.push((i, j, Sign::Positive));
            }
        }
    }
    Ok(SignedGraph::new(seqs.len(), edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_examples() {
        assert_eq!(gen_shift(1, 5).unwrap(), Graph::complete(5));
        assert_eq!(gen_shift(3, 6).unwrap().n(), 20);
        let s23 = gen_shift(2, 3).unwrap();
        assert_eq!(shift_sequences(2, 3), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(s23.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert!(gen_shift(0, 3).is_err() && gen_shift(4, 3).is_err());
    }

    #[test]
    fn signed_shift_n4() {
        let g = gen_signed_shift3(4).unwrap();
        // 123, 124, 134, 234
        assert_eq!(g.n(), 4);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1, Sign::Positive), (0, 3, Sign::Negative), (2, 3, Sign::Positive)]
        );
        assert!(gen_signed_shift3(2).is_err());
    }
}
