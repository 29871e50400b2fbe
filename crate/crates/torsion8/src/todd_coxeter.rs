//! Todd-Coxeter coset enumeration over the trivial subgroup.
//!
//! Enumerates the elements of a finitely presented group as cosets,
//! deducing and merging table entries until every relator scans closed at
//! every live coset. Letters are encoded as signed generator indices:
//! `+k` is generator `k-1`, `-k` its inverse. The enumeration aborts once
//! the table grows past the given cap, which flags a presentation that
//! fails to close at the expected order.

/// Regular representation of the presented group: `gen_perms[g][c]` is the
/// coset reached from `c` by generator `g`.
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub num_cosets: usize,
    pub gen_perms: Vec<Vec<usize>>,
}

pub type Word = Vec<i32>;

pub fn inverse_word(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

pub fn concat(words: &[&[i32]]) -> Word {
    words.iter().flat_map(|w| w.iter().copied()).collect()
}

/// `[x, y] = x y x^-1 y^-1`.
pub fn commutator_word(x: &[i32], y: &[i32]) -> Word {
    concat(&[x, y, &inverse_word(x), &inverse_word(y)])
}

pub fn power_word(x: &[i32], n: usize) -> Word {
    let mut w = Word::new();
    for _ in 0..n {
        w.extend_from_slice(x);
    }
    w
}

struct Enumerator {
    num_cols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    queue: std::collections::VecDeque<(usize, usize)>,
    cap: usize,
}

impl Enumerator {
    fn col(&self, letter: i32) -> usize {
        let g = (letter.unsigned_abs() as usize - 1) * 2;
        if letter > 0 {
            g
        } else {
            g + 1
        }
    }

    fn inv_col(&self, letter: i32) -> usize {
        self.col(-letter)
    }

    fn find(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            self.parent[c] = self.parent[self.parent[c]];
            c = self.parent[c];
        }
        c
    }

    fn define(&mut self, c: usize, col: usize) -> Option<usize> {
        if self.table.len() >= self.cap {
            return None;
        }
        let n = self.table.len();
        self.table.push(vec![None; self.num_cols]);
        self.parent.push(n);
        self.table[c][col] = Some(n);
        self.table[n][col ^ 1] = Some(c);
        Some(n)
    }

    /// Records `c . col = d`, merging cosets if the slot disagrees.
    fn deduce(&mut self, c: usize, col: usize, d: usize) {
        match self.table[c][col] {
            None => {
                self.table[c][col] = Some(d);
                match self.table[d][col ^ 1] {
                    None => self.table[d][col ^ 1] = Some(c),
                    Some(e) if e != c => self.queue.push_back((e, c)),
                    _ => {}
                }
            }
            Some(e) if e != d => self.queue.push_back((e, d)),
            _ => {}
        }
    }

    fn process_coincidences(&mut self) {
        while let Some((a, b)) = self.queue.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, dead) = if a < b { (a, b) } else { (b, a) };
            self.parent[dead] = keep;
            for col in 0..self.num_cols {
                if let Some(d) = self.table[dead][col] {
                    let d = self.find(d);
                    let keep = self.find(keep);
                    self.deduce(keep, col, d);
                    self.deduce(d, col ^ 1, keep);
                }
            }
        }
    }

    /// Scans a relator at a coset, filling gaps with new cosets.
    /// Returns false when the cap is hit.
    fn scan_and_fill(&mut self, c: usize, relator: &[i32]) -> bool {
        let mut f = c;
        let mut i = 0;
        // forward as far as the table is defined
        while i < relator.len() {
            let col = self.col(relator[i]);
            match self.table[f][col] {
                Some(next) => {
                    f = self.find(next);
                    i += 1;
                }
                None => break,
            }
        }
        if i == relator.len() {
            if f != c {
                self.queue.push_back((f, c));
            }
            return true;
        }
        // backward from the end
        let mut b = c;
        let mut j = relator.len();
        while j > i + 1 {
            let col = self.inv_col(relator[j - 1]);
            match self.table[b][col] {
                Some(prev) => {
                    b = self.find(prev);
                    j -= 1;
                }
                None => break,
            }
        }
        // fill the remaining gap with fresh cosets
        while j > i + 1 {
            let col = self.col(relator[i]);
            match self.define(f, col) {
                Some(n) => {
                    f = n;
                    i += 1;
                }
                None => return false,
            }
        }
        // close the last edge
        let col = self.col(relator[i]);
        self.deduce(f, col, b);
        self.deduce(b, col ^ 1, f);
        true
    }
}

/// Enumerates the group `< g_1..g_n | relators >`; `None` if more than
/// `cap` cosets get defined before closure.
pub fn enumerate(num_gens: usize, relators: &[Word], cap: usize) -> Option<CosetTable> {
    let mut e = Enumerator {
        num_cols: 2 * num_gens,
        table: vec![vec![None; 2 * num_gens]],
        parent: vec![0],
        queue: std::collections::VecDeque::new(),
        cap,
    };
    let mut c = 0;
    while c < e.table.len() {
        if e.find(c) != c {
            c += 1;
            continue;
        }
        for r in relators {
            if !e.scan_and_fill(c, r) {
                return None;
            }
            e.process_coincidences();
            if e.find(c) != c {
                break;
            }
        }
        if e.find(c) == c {
            // make sure every generator edge is defined at this coset
            for col in 0..e.num_cols {
                if e.table[c][col].is_none() {
                    e.define(c, col)?;
                }
            }
        }
        c += 1;
    }

    // compress live cosets
    let mut live: Vec<usize> = Vec::new();
    let mut rename = vec![usize::MAX; e.table.len()];
    for c in 0..e.table.len() {
        if e.find(c) == c {
            rename[c] = live.len();
            live.push(c);
        }
    }
    let mut gen_perms = vec![vec![0usize; live.len()]; num_gens];
    for (new_c, &c) in live.iter().enumerate() {
        for g in 0..num_gens {
            let img = e.table[c][2 * g].expect("closed table");
            let img = e.find(img);
            gen_perms[g][new_c] = rename[img];
        }
    }
    Some(CosetTable {
        num_cosets: live.len(),
        gen_perms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group() {
        let t = enumerate(1, &[power_word(&[1], 5)], 100).unwrap();
        assert_eq!(t.num_cosets, 5);
    }

    #[test]
    fn symmetric_group_s3() {
        // <a, b | a^2, b^2, (ab)^3>
        let relators = vec![
            power_word(&[1], 2),
            power_word(&[2], 2),
            power_word(&[1, 2], 3),
        ];
        let t = enumerate(2, &relators, 100).unwrap();
        assert_eq!(t.num_cosets, 6);
    }

    #[test]
    fn quaternion_group() {
        // <a, b | a^4, a^2 b^-2, b^-1 a b a>
        let relators = vec![
            power_word(&[1], 4),
            concat(&[&[1, 1], &[-2, -2]]),
            concat(&[&[-2], &[1], &[2], &[1]]),
        ];
        let t = enumerate(2, &relators, 100).unwrap();
        assert_eq!(t.num_cosets, 8);
    }

    #[test]
    fn infinite_group_hits_cap() {
        // Z = <a | > never closes
        assert!(enumerate(1, &[], 50).is_none());
    }
}
