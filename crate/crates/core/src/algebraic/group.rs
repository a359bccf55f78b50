//! Finite groups given by Cayley tables, and their endomorphisms.
//!
//! Text format for a table:
//!
//! ```text
//! # comments start with '#'
//! 3          <- order n
//! 0          <- index of the identity
//! 0 1 2      <- row x lists x*y for y = 0..n
//! 1 2 0
//! 2 0 1
//! e a a2     <- optional element names
//! ```

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::sequence::Sequence1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    names: Vec<String>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidGroup(msg.into())
}

impl FiniteGroup {
    /// Builds a group from a row-major table, checking closure, identity,
    /// inverses and associativity.
    pub fn new(table: Vec<usize>, identity: usize, names: Option<Vec<String>>) -> Result<Self> {
        let n = (table.len() as f64).sqrt() as usize;
        if n == 0 || n * n != table.len() {
            return Err(invalid(format!("table has {} entries, not a non-zero square", table.len())));
        }
        if identity >= n {
            return Err(invalid(format!("identity {identity} out of range")));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(invalid(format!("entry {bad} out of range for order {n}")));
        }
        let names = match names {
            Some(v) if v.len() != n => {
                return Err(invalid(format!("{} names for {n} elements", v.len())));
            }
            Some(v) => v,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        let g = FiniteGroup { order: n, table, identity, names };
        for x in 0..n {
            if g.mul(identity, x) != x || g.mul(x, identity) != x {
                return Err(invalid(format!("{identity} is not an identity for {x}")));
            }
            if !(0..n).any(|y| g.mul(x, y) == identity) {
                return Err(invalid(format!("element {x} has no inverse")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = g.mul(x, y);
                for z in 0..n {
                    if g.mul(xy, z) != g.mul(x, g.mul(y, z)) {
                        return Err(invalid(format!("({x}*{y})*{z} != {x}*({y}*{z})")));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Elements reachable from `gens`, in discovery order.
    pub fn generated_by(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        let mut out = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    /// Greedy generating set: scan elements by index, keep those not yet
    /// generated.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut size = 1;
        for x in 0..self.order {
            if size == self.order {
                break;
            }
            let mut trial = gens.clone();
            trial.push(x);
            let span = self.generated_by(&trial).len();
            if span > size {
                gens = trial;
                size = span;
            }
        }
        gens
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, toks)| !toks.is_empty())
            .collect();
        let num = |line: usize, tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| invalid(format!("line {line}: expected an index, got {tok:?}")))
        };
        let mut it = lines.into_iter();
        let (l, toks) = it.next().ok_or_else(|| invalid("empty table"))?;
        if toks.len() != 1 {
            return Err(invalid(format!("line {l}: expected the order alone")));
        }
        let n = num(l, toks[0])?;
        let (l, toks) = it.next().ok_or_else(|| invalid("missing identity line"))?;
        if toks.len() != 1 {
            return Err(invalid(format!("line {l}: expected the identity index alone")));
        }
        let identity = num(l, toks[0])?;
        let mut table = Vec::with_capacity(n * n);
        for row in 0..n {
            let (l, toks) = it.next().ok_or_else(|| invalid(format!("missing row {row}")))?;
            if toks.len() != n {
                return Err(invalid(format!("line {l}: expected {n} entries, got {}", toks.len())));
            }
            for t in toks {
                table.push(num(l, t)?);
            }
        }
        let names = match it.next() {
            None => None,
            Some((l, toks)) => {
                if toks.len() != n {
                    return Err(invalid(format!("line {l}: expected {n} names")));
                }
                Some(toks.into_iter().map(String::from).collect())
            }
        };
        if let Some((l, _)) = it.next() {
            return Err(invalid(format!("line {l}: unexpected content after names")));
        }
        Self::new(table, identity, names)
    }

    pub fn to_table_text(&self) -> String {
        let mut s = format!("{}\n{}\n", self.order, self.identity);
        for row in self.table.chunks(self.order) {
            let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s.push_str(&self.names.join(" "));
        s.push('\n');
        s
    }

    fn from_fn(n: usize, identity: usize, names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..n * n).map(|i| mul(i / n, i % n)).collect();
        Self::new(table, identity, Some(names)).expect("builtin group")
    }

    pub fn trivial() -> Self {
        Self::from_fn(1, 0, vec!["e".into()], |_, _| 0)
    }

    /// `Z/n` with element `i` the residue `i`.
    pub fn cyclic(n: usize) -> Self {
        Self::from_fn(n, 0, (0..n).map(|i| i.to_string()).collect(), |x, y| (x + y) % n)
    }

    /// `S_3` as permutations of `{0, 1, 2}` in lexicographic order of their
    /// one-line notation.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let names = ["e", "(12)", "(01)", "(012)", "(021)", "(02)"];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        // (x*y)(i) = x(y(i))
        Self::from_fn(6, 0, names.iter().map(|s| s.to_string()).collect(), |x, y| {
            let (px, py) = (perms[x], perms[y]);
            index([px[py[0]], px[py[1]], px[py[2]]])
        })
    }

    /// `D_8 = <u, v | u^4 = v^2 = e, v u v^-1 = u^-1>`, element `u^i v^j`
    /// at index `i + 4j`.
    pub fn dihedral8() -> Self {
        let names = ["e", "u", "u2", "u3", "v", "uv", "u2v", "u3v"];
        Self::from_fn(8, 0, names.iter().map(|s| s.to_string()).collect(), |x, y| {
            let (a, b) = (x % 4, x / 4);
            let (c, d) = (y % 4, y / 4);
            let exp = if b == 0 { a + c } else { a + 4 - c };
            exp % 4 + 4 * ((b + d) % 2)
        })
    }

    /// `(Z/2)^3` with bitwise xor.
    pub fn elementary_abelian8() -> Self {
        Self::from_fn(8, 0, (0..8).map(|i| format!("{i:03b}")).collect(), |x, y| x ^ y)
    }

    /// `Q_8` with elements `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion8() -> Self {
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"];
        // unit u in {1,i,j,k} = 0..4 and a sign bit
        let unit_mul = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) | (x, 0) => (x, false),
                (x, y) if x == y => (0, true),
                (1, 2) => (3, false),
                (2, 1) => (3, true),
                (2, 3) => (1, false),
                (3, 2) => (1, true),
                (3, 1) => (2, false),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        Self::from_fn(8, 0, names.iter().map(|s| s.to_string()).collect(), |x, y| {
            let (u, neg) = unit_mul(x / 2, y / 2);
            let sign = (x % 2) ^ (y % 2) ^ neg as usize;
            2 * u + sign
        })
    }

    /// The bundled groups, by name.
    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "trivial" => Some(Self::trivial()),
            "z6" => Some(Self::cyclic(6)),
            "s3" => Some(Self::symmetric3()),
            "d8" => Some(Self::dihedral8()),
            "z2^3" => Some(Self::elementary_abelian8()),
            "q8" => Some(Self::quaternion8()),
            _ => None,
        }
    }

    pub const BUILTIN_NAMES: [&'static str; 6] = ["trivial", "z6", "s3", "d8", "z2^3", "q8"];
}

/// A map `G -> G` given by the image of each element index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endomorphism {
    image: Vec<usize>,
}

impl Endomorphism {
    /// Checks `theta(xy) = theta(x) theta(y)` for every pair.
    pub fn new(g: &FiniteGroup, image: Vec<usize>) -> Result<Self> {
        if image.len() != g.order() || image.iter().any(|&x| x >= g.order()) {
            return Err(invalid("image list does not describe a map G -> G"));
        }
        for x in 0..g.order() {
            for y in 0..g.order() {
                if image[g.mul(x, y)] != g.mul(image[x], image[y]) {
                    return Err(invalid(format!("not a homomorphism at ({x}, {y})")));
                }
            }
        }
        Ok(Endomorphism { image })
    }

    /// The unique homomorphism sending `gens[i]` to `images[i]`, if any.
    pub fn from_generator_images(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Self> {
        let image = extend(g, gens, images)?;
        if image.contains(&usize::MAX) {
            return None;
        }
        Self::new(g, image).ok()
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Endomorphism { image: (0..g.order()).collect() }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Endomorphism { image: vec![g.identity(); g.order()] }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_automorphism(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        self.image.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn compose(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Extends generator images along the Cayley graph of `<gens>`; `None` on
/// a conflict. Elements outside the subgroup map to `usize::MAX`.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = g.identity();
    let mut queue = vec![g.identity()];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let img = g.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}

/// Every endomorphism of `g`, ordered lexicographically by the images of
/// [`FiniteGroup::generating_set`].
pub fn enumerate_endomorphisms(g: &FiniteGroup) -> Vec<Endomorphism> {
    let gens = g.generating_set();
    let orders: Vec<usize> = gens.iter().map(|&s| g.element_order(s)).collect();
    let elem_orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, &gens, &orders, &elem_orders, &mut images, &mut out);
    out
}

fn search(
    g: &FiniteGroup,
    gens: &[usize],
    orders: &[usize],
    elem_orders: &[usize],
    images: &mut Vec<usize>,
    out: &mut Vec<Endomorphism>,
) {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend(g, gens, images).expect("checked at the previous level");
        out.push(Endomorphism::new(g, map).expect("extension of consistent images is a homomorphism"));
        return;
    }
    for t in 0..g.order() {
        if orders[depth] % elem_orders[t] != 0 {
            continue;
        }
        images.push(t);
        if extend(g, &gens[..=depth], images).is_some() {
            search(g, gens, orders, elem_orders, images, out);
        }
        images.pop();
    }
}

/// Every endomorphism by backtracking over all `n^n` maps, for `|G| <= 8`.
/// Sorted by image tuple.
pub fn enumerate_endomorphisms_exhaustive(g: &FiniteGroup) -> Result<Vec<Endomorphism>> {
    let n = g.order();
    if n > 8 {
        return Err(Error::Unsupported(format!("exhaustive search needs |G| <= 8, got {n}")));
    }
    fn go(g: &FiniteGroup, map: &mut Vec<usize>, out: &mut Vec<Endomorphism>) {
        let n = g.order();
        let k = map.len();
        if k == n {
            out.push(Endomorphism { image: map.clone() });
            return;
        }
        for t in 0..n {
            map.push(t);
            let ok = (0..=k).all(|x| {
                (0..=k).all(|y| {
                    let xy = g.mul(x, y);
                    xy > k || map[xy] == g.mul(map[x], map[y])
                })
            });
            if ok {
                go(g, map, out);
            }
            map.pop();
        }
    }
    let mut out = Vec::new();
    go(g, &mut Vec::with_capacity(n), &mut out);
    Ok(out)
}

/// `fix_n(theta)` for `n = 1..=len`, following the powers of `theta` until
/// they repeat.
pub fn fix_counts(g: &FiniteGroup, theta: &Endomorphism, len: usize) -> Sequence1 {
    let count = |m: &Endomorphism| (0..g.order()).filter(|&x| m.apply(x) == x).count();
    let mut seen: HashMap<Endomorphism, usize> = HashMap::new();
    let mut powers = Vec::new();
    let mut current = theta.clone();
    // powers[i] = theta^(i+1)
    let (start, period) = loop {
        if let Some(&i) = seen.get(&current) {
            break (i, powers.len() - i);
        }
        seen.insert(current.clone(), powers.len());
        powers.push(count(&current));
        if powers.len() >= len {
            break (0, usize::MAX);
        }
        current = theta.compose(&current);
    };
    Sequence1::from_fn("fix", len.max(1), |n| {
        let i = n - 1;
        if i < powers.len() {
            powers[i]
        } else {
            powers[start + (i - start) % period]
        }
        .into()
    })
    .expect("non-empty")
}

/// The first endomorphism (in enumeration order) whose fixed-point counts
/// equal `target` on its whole length.
pub fn find_realizing_endomorphism(g: &FiniteGroup, target: &Sequence1) -> Option<Endomorphism> {
    enumerate_endomorphisms(g)
        .into_iter()
        .find(|theta| fix_counts(g, theta, target.len()).values() == target.values())
}
