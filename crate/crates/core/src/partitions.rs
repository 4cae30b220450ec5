//! Set partitions of finite ordered ground sets, with the non-crossing
//! combinatorics used by cumulant transforms.
//!
//! Partitions are kept in a canonical form (blocks sorted internally and
//! listed by their minima), so structural equality coincides with equality
//! of partitions and values can serve as map keys. Besides the two
//! classical partial orders on non-crossing partitions (reversed
//! refinement `<=` and the stronger order that also ties together the
//! endpoints of every coarse block) the module provides restriction,
//! disjoint unions, the maximal non-crossing completion of a partition on
//! the complement of its ground set, the Kreweras complement, partial
//! pairings with at most two elements per block, and the bijection that
//! closes a partial pairing of `{1..n}` into a partition of `{0..n+1}`
//! without singleton blocks.

use std::collections::BTreeMap;
use std::fmt;

/// Errors from partition construction and the partition operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("ground set must be nonempty")]
    EmptyGround,
    #[error("blocks must be nonempty")]
    EmptyBlock,
    #[error("element {0} appears more than once")]
    DuplicateElement(u32),
    #[error("blocks do not cover the ground set: element {0} is missing")]
    MissingElement(u32),
    #[error("element {0} does not belong to the stated ground set")]
    UnexpectedElement(u32),
    #[error("ground sets overlap at element {0}")]
    GroundOverlap(u32),
    #[error("expected ground set {expected}, got {got}")]
    WrongGround { expected: String, got: String },
    #[error("partition has crossing blocks")]
    Crossing,
    #[error("block containing {0} has more than two elements; a partial pairing allows only singletons and pairs")]
    BlockTooLarge(u32),
    #[error("first and last elements of the ground set lie in different blocks")]
    EndpointsSplit,
    #[error("elements 0 and n+1 must lie in one block")]
    FrameSplit,
    #[error("partition has a singleton block at {0}")]
    SingletonBlock(u32),
}

/// A nonempty, strictly increasing finite set of points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet(Vec<u32>);

impl GroundSet {
    /// Builds a ground set from arbitrary distinct elements (sorted here).
    pub fn new(mut elems: Vec<u32>) -> Result<Self, PartitionError> {
        if elems.is_empty() {
            return Err(PartitionError::EmptyGround);
        }
        elems.sort_unstable();
        for pair in elems.windows(2) {
            if pair[0] == pair[1] {
                return Err(PartitionError::DuplicateElement(pair[0]));
            }
        }
        Ok(GroundSet(elems))
    }

    /// The segment `{1, ..., n}`.
    pub fn first_n(n: usize) -> Self {
        assert!(n >= 1, "ground set must be nonempty");
        GroundSet((1..=n as u32).collect())
    }

    pub fn elems(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A partition of a finite ordered ground set into disjoint nonempty blocks.
///
/// Canonical form: every block is sorted increasingly and blocks are listed
/// by their minima. The ground set is the union of the blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: Vec<u32>,
    blocks: Vec<Vec<u32>>,
    /// `(element, index of its block)`, sorted by element.
    elem_block: Vec<(u32, usize)>,
}

impl SetPartition {
    /// Builds a partition from its blocks; the ground set is their union.
    pub fn new(blocks: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let mut elem_block: Vec<(u32, usize)> = blocks
            .iter()
            .enumerate()
            .flat_map(|(bi, b)| b.iter().map(move |&e| (e, bi)))
            .collect();
        elem_block.sort_unstable();
        for pair in elem_block.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(PartitionError::DuplicateElement(pair[0].0));
            }
        }
        let ground: Vec<u32> = elem_block.iter().map(|&(e, _)| e).collect();
        if ground.is_empty() {
            return Err(PartitionError::EmptyGround);
        }
        Ok(SetPartition {
            ground,
            blocks,
            elem_block,
        })
    }

    /// Like [`Self::new`], but also checks that the blocks cover exactly the
    /// given ground set.
    pub fn with_ground(ground: &GroundSet, blocks: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        let p = Self::new(blocks)?;
        for &e in ground.elems() {
            if p.block_index_of(e).is_none() {
                return Err(PartitionError::MissingElement(e));
            }
        }
        for &e in &p.ground {
            if ground.elems().binary_search(&e).is_err() {
                return Err(PartitionError::UnexpectedElement(e));
            }
        }
        Ok(p)
    }

    /// The partition into singletons (the minimum of reversed refinement).
    pub fn discrete(ground: &GroundSet) -> Self {
        Self::new(ground.elems().iter().map(|&e| vec![e]).collect())
            .expect("singleton blocks always form a partition")
    }

    /// The one-block partition (the maximum of reversed refinement).
    pub fn full(ground: &GroundSet) -> Self {
        Self::new(vec![ground.elems().to_vec()]).expect("one block always forms a partition")
    }

    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    /// Number of ground elements.
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_index_of(&self, x: u32) -> Option<usize> {
        self.elem_block
            .binary_search_by_key(&x, |&(e, _)| e)
            .ok()
            .map(|i| self.elem_block[i].1)
    }

    pub fn same_block(&self, x: u32, y: u32) -> bool {
        let bx = self
            .block_index_of(x)
            .unwrap_or_else(|| panic!("element {x} not in the ground set"));
        let by = self
            .block_index_of(y)
            .unwrap_or_else(|| panic!("element {y} not in the ground set"));
        bx == by
    }

    /// Whether no two blocks cross: there are no `i < j < k < l` with
    /// `i, k` in one block and `j, l` in a different block.
    ///
    /// Implemented as a single left-to-right scan with a stack of open
    /// blocks; a block may resume only while it is the innermost open one.
    pub fn is_noncrossing(&self) -> bool {
        let mut open: Vec<usize> = Vec::new();
        let mut seen = vec![0usize; self.blocks.len()];
        for &x in &self.ground {
            let b = self.block_index_of(x).expect("ground element has a block");
            let size = self.blocks[b].len();
            if seen[b] == 0 {
                if size > 1 {
                    open.push(b);
                }
            } else {
                if open.last() != Some(&b) {
                    return false;
                }
                if seen[b] + 1 == size {
                    open.pop();
                }
            }
            seen[b] += 1;
        }
        true
    }

    /// Reversed refinement: `self <= coarser` iff every block of `self` is
    /// contained in a block of `coarser`. Both partitions must share one
    /// ground set.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        assert_eq!(
            self.ground, coarser.ground,
            "partitions compared under refinement must share a ground set"
        );
        self.blocks.iter().all(|b| {
            let target = coarser.block_index_of(b[0]);
            b[1..].iter().all(|&e| coarser.block_index_of(e) == target)
        })
    }

    /// The stronger order: `self` refines `coarser` and, in addition, the
    /// minimum and maximum of every block of `coarser` lie in one block of
    /// `self`. Written `self << coarser` for non-crossing partitions.
    pub fn strongly_refines(&self, coarser: &SetPartition) -> bool {
        self.refines(coarser)
            && coarser.blocks.iter().all(|c| {
                let (min, max) = (c[0], c[c.len() - 1]);
                self.same_block(min, max)
            })
    }

    /// The restriction of the partition to a subset of its ground set:
    /// blocks are intersected with the subset and empty traces dropped.
    pub fn restrict(&self, subset: &[u32]) -> SetPartition {
        assert!(!subset.is_empty(), "restriction target must be nonempty");
        assert!(
            subset.windows(2).all(|p| p[0] < p[1]),
            "restriction target must be strictly increasing"
        );
        for &e in subset {
            assert!(
                self.block_index_of(e).is_some(),
                "restriction target element {e} outside the ground set"
            );
        }
        let blocks: Vec<Vec<u32>> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|e| subset.binary_search(e).is_ok())
                    .collect::<Vec<u32>>()
            })
            .filter(|b: &Vec<u32>| !b.is_empty())
            .collect();
        SetPartition::new(blocks).expect("restricted blocks form a partition")
    }

    /// The common refinement-free union of two partitions with disjoint
    /// ground sets: the blocks are simply the blocks of both.
    pub fn disjoint_union(&self, other: &SetPartition) -> Result<SetPartition, PartitionError> {
        if let Some(&e) = self
            .ground
            .iter()
            .find(|e| other.block_index_of(**e).is_some())
        {
            return Err(PartitionError::GroundOverlap(e));
        }
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        SetPartition::new(blocks)
    }

    /// The Kreweras complement of a non-crossing partition.
    ///
    /// The ground set is relabeled along the unique order isomorphism onto
    /// `{1..n}`; interleaving primed copies as `1, 1', 2, 2', ..., n, n'`,
    /// the complement is the maximal partition of the primed points whose
    /// union with `self` is still non-crossing.
    pub fn kreweras_complement(&self) -> SetPartition {
        assert!(
            self.is_noncrossing(),
            "Kreweras complement requires a non-crossing partition"
        );
        let n = self.n();
        let position: BTreeMap<u32, u32> = self
            .ground
            .iter()
            .enumerate()
            .map(|(i, &e)| (e, i as u32))
            .collect();
        // ground[i] sits at odd point 2i+1; its primed copy at 2i+2
        let odd_blocks: Vec<Vec<u32>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|e| 2 * position[e] + 1).collect())
            .collect();
        let on_odds = SetPartition::new(odd_blocks).expect("relabeled blocks form a partition");
        let evens = GroundSet::new((1..=n as u32).map(|i| 2 * i).collect())
            .expect("ground set is nonempty");
        let hat = maximal_completion(&on_odds, &evens).expect("odd and even points are disjoint");
        let blocks: Vec<Vec<u32>> = hat
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&e| self.ground[(e / 2 - 1) as usize])
                    .collect()
            })
            .collect();
        SetPartition::new(blocks).expect("complement blocks form a partition")
    }
}

impl fmt::Display for SetPartition {
    /// Text form `{1,9}{2,8}{3,6,7}{4,5}` in canonical block order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            write!(f, "{{")?;
            for (i, e) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

/// The maximal partition `hat` of `extra` whose disjoint union with `base`
/// is non-crossing on the merged ground set.
///
/// Characterizing property: for every partition `sigma` of `extra`,
/// `base u sigma` is non-crossing iff `sigma` refines `hat`. Two points
/// `x < y` of `extra` share a block of `hat` iff no block of `base` has
/// elements both strictly between `x` and `y` and strictly outside; this
/// relation is transitive when `base` is non-crossing, so the blocks are
/// its equivalence classes.
pub fn maximal_completion(
    base: &SetPartition,
    extra: &GroundSet,
) -> Result<SetPartition, PartitionError> {
    assert!(
        base.is_noncrossing(),
        "maximal completion requires a non-crossing base partition"
    );
    for &e in extra.elems() {
        if base.block_index_of(e).is_some() {
            return Err(PartitionError::GroundOverlap(e));
        }
    }
    let pts = extra.elems();
    let m = pts.len();

    let separated = |x: u32, y: u32| -> bool {
        base.blocks().iter().any(|b| {
            let lo = b.partition_point(|&e| e <= x);
            let hi = b.partition_point(|&e| e < y);
            hi > lo && (hi - lo) < b.len()
        })
    };

    // union-find over the positions of `extra`
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..m {
        for j in (i + 1)..m {
            if !separated(pts[i], pts[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (i, &pt) in pts.iter().enumerate() {
        let root = find(&mut parent, i);
        classes.entry(root).or_default().push(pt);
    }
    SetPartition::new(classes.into_values().collect())
}

/// `binomial(n, k)` for the small arguments that occur in block counts.
pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// Number of non-crossing partitions `rho` with `blocks` many blocks that
/// lie strongly above `p` (that is, `p` strongly refines `rho`).
///
/// Requires `p` to tie its first and last ground elements into one block
/// (equivalently, `p` strongly refines the one-block partition); the count
/// is then `binomial(|p| - 1, blocks - 1)`, independently of the shape of
/// `p`.
pub fn count_strongly_coarser(p: &SetPartition, blocks: usize) -> Result<u64, PartitionError> {
    assert!(
        p.is_noncrossing(),
        "counting strongly coarser partitions requires a non-crossing partition"
    );
    let first = p.ground()[0];
    let last = *p.ground().last().expect("ground set is nonempty");
    if !p.same_block(first, last) {
        return Err(PartitionError::EndpointsSplit);
    }
    if blocks == 0 {
        return Ok(0);
    }
    Ok(binomial(p.block_count() - 1, blocks - 1))
}

/// All partitions of the ground set (crossing ones included), generated by
/// inserting each element into every block of every partial partition.
/// Grows like the Bell numbers; intended as a brute-force oracle.
pub fn enumerate_all(ground: &GroundSet) -> Vec<SetPartition> {
    let mut partial: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
    for &e in ground.elems() {
        let mut next = Vec::new();
        for blocks in &partial {
            for bi in 0..blocks.len() {
                let mut nb = blocks.clone();
                nb[bi].push(e);
                next.push(nb);
            }
            let mut nb = blocks.clone();
            nb.push(vec![e]);
            next.push(nb);
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|blocks| SetPartition::new(blocks).expect("generated blocks form a partition"))
        .collect()
}

fn nc_blocks(elems: &[u32]) -> Vec<Vec<Vec<u32>>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let rest = &elems[1..];
    let m = rest.len();
    assert!(m < 63, "non-crossing enumeration limited to 63 elements");
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        // the block containing `first` is determined by the mask; every
        // other block must live inside a single gap between its elements
        let mut block = vec![first];
        let mut gaps: Vec<&[u32]> = Vec::new();
        let mut gap_start = 0usize;
        for (i, &e) in rest.iter().enumerate() {
            if mask & (1u64 << i) != 0 {
                gaps.push(&rest[gap_start..i]);
                block.push(e);
                gap_start = i + 1;
            }
        }
        gaps.push(&rest[gap_start..]);
        let mut combos: Vec<Vec<Vec<u32>>> = vec![vec![block]];
        for gap in gaps {
            if gap.is_empty() {
                continue;
            }
            let sub = nc_blocks(gap);
            let mut next = Vec::with_capacity(combos.len() * sub.len());
            for existing in &combos {
                for extension in &sub {
                    let mut merged = existing.clone();
                    merged.extend(extension.iter().cloned());
                    next.push(merged);
                }
            }
            combos = next;
        }
        out.extend(combos);
    }
    out
}

/// All non-crossing partitions of the ground set, generated recursively by
/// the decomposition along the block of the first element (Catalan many).
pub fn enumerate_nc(ground: &GroundSet) -> Vec<SetPartition> {
    if ground.len() > 12 {
        log::warn!(
            "enumerating non-crossing partitions of {} points; counts grow like the Catalan numbers",
            ground.len()
        );
    }
    nc_blocks(ground.elems())
        .into_iter()
        .map(|blocks| SetPartition::new(blocks).expect("generated blocks form a partition"))
        .collect()
}

/// All interval partitions of the ground set: each block is a contiguous
/// run of consecutive ground elements. There are `2^(n-1)` of them.
pub fn enumerate_interval(ground: &GroundSet) -> Vec<SetPartition> {
    let elems = ground.elems();
    let n = elems.len();
    assert!(n < 63, "interval enumeration limited to 63 elements");
    let mut out = Vec::with_capacity(1usize << (n - 1));
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        let mut current = vec![elems[0]];
        for (i, &e) in elems.iter().enumerate().skip(1) {
            if mask & (1u64 << (i - 1)) != 0 {
                blocks.push(std::mem::take(&mut current));
            }
            current.push(e);
        }
        blocks.push(current);
        out.push(SetPartition::new(blocks).expect("interval blocks form a partition"));
    }
    out
}

/// A non-crossing partition whose blocks all have one or two elements:
/// a partial pairing of its ground set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPairing(SetPartition);

impl PartialPairing {
    pub fn new(partition: SetPartition) -> Result<Self, PartitionError> {
        for b in partition.blocks() {
            if b.len() > 2 {
                return Err(PartitionError::BlockTooLarge(b[0]));
            }
        }
        if !partition.is_noncrossing() {
            return Err(PartitionError::Crossing);
        }
        Ok(PartialPairing(partition))
    }

    pub fn as_partition(&self) -> &SetPartition {
        &self.0
    }

    /// The two-element blocks, as `(min, max)` pairs in block order.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        self.0
            .blocks()
            .iter()
            .filter(|b| b.len() == 2)
            .map(|b| (b[0], b[1]))
            .collect()
    }

    /// The elements covered by two-element blocks, sorted.
    pub fn paired_points(&self) -> Vec<u32> {
        let mut pts: Vec<u32> = self
            .0
            .blocks()
            .iter()
            .filter(|b| b.len() == 2)
            .flatten()
            .copied()
            .collect();
        pts.sort_unstable();
        pts
    }

    /// The elements left in singleton blocks, sorted.
    pub fn single_points(&self) -> Vec<u32> {
        let mut pts: Vec<u32> = self
            .0
            .blocks()
            .iter()
            .filter(|b| b.len() == 1)
            .flatten()
            .copied()
            .collect();
        pts.sort_unstable();
        pts
    }
}

impl fmt::Display for PartialPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for PartialPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialPairing({})", self.0)
    }
}

fn nc_le2_blocks(elems: &[u32]) -> Vec<Vec<Vec<u32>>> {
    if elems.is_empty() {
        return vec![Vec::new()];
    }
    let first = elems[0];
    let mut out = Vec::new();
    for mut blocks in nc_le2_blocks(&elems[1..]) {
        blocks.push(vec![first]);
        out.push(blocks);
    }
    for (j, &partner) in elems.iter().enumerate().skip(1) {
        // pairing `first` with `partner` confines further blocks to the
        // inside and the outside of the pair
        let inner = nc_le2_blocks(&elems[1..j]);
        let outer = nc_le2_blocks(&elems[j + 1..]);
        for bi in &inner {
            for bo in &outer {
                let mut blocks = vec![vec![first, partner]];
                blocks.extend(bi.iter().cloned());
                blocks.extend(bo.iter().cloned());
                out.push(blocks);
            }
        }
    }
    out
}

/// All non-crossing partial pairings of the ground set (Motzkin many).
pub fn enumerate_nc_le2(ground: &GroundSet) -> Vec<PartialPairing> {
    nc_le2_blocks(ground.elems())
        .into_iter()
        .map(|blocks| {
            PartialPairing::new(
                SetPartition::new(blocks).expect("generated blocks form a partition"),
            )
            .expect("generated pairings are non-crossing with small blocks")
        })
        .collect()
}

/// Closes a partial pairing of `{1..n}` into a partition of `{0..n+1}`
/// without singleton blocks.
///
/// A frame block is opened with `0` and `n+1`; every singleton of the
/// pairing joins the innermost pair enclosing it, or the frame when no
/// pair encloses it. Inverse of [`endpoint_pairing`].
pub fn enclose_pairing(rho: &PartialPairing) -> Result<SetPartition, PartitionError> {
    let p = rho.as_partition();
    let n = p.n() as u32;
    if p.ground() != (1..=n).collect::<Vec<u32>>().as_slice() {
        return Err(PartitionError::WrongGround {
            expected: format!("{{1..{n}}}"),
            got: format!("{:?}", p.ground()),
        });
    }
    let pairs = rho.pairs();
    let mut blocks: Vec<Vec<u32>> = vec![vec![0, n + 1]];
    blocks.extend(pairs.iter().map(|&(a, b)| vec![a, b]));
    for &s in &rho.single_points() {
        // innermost enclosing pair = largest opening point below s
        let target = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a < s && s < b)
            .max_by_key(|(_, &(a, _))| a)
            .map(|(i, _)| i + 1)
            .unwrap_or(0);
        blocks[target].push(s);
    }
    SetPartition::new(blocks)
}

/// Reduces a partition of `{0..n+1}` from the image of [`enclose_pairing`]
/// back to a partial pairing of `{1..n}`: every block not containing `0`
/// contributes the pair of its endpoints, all remaining points become
/// singletons.
///
/// The input must be non-crossing, tie `0` and `n+1` together, and have no
/// singleton blocks.
pub fn endpoint_pairing(pi: &SetPartition) -> Result<PartialPairing, PartitionError> {
    let ground = pi.ground();
    let top = *ground.last().expect("ground set is nonempty");
    if top < 2 || ground != (0..=top).collect::<Vec<u32>>().as_slice() {
        return Err(PartitionError::WrongGround {
            expected: "{0..n+1} with n >= 1".to_string(),
            got: format!("{ground:?}"),
        });
    }
    if !pi.is_noncrossing() {
        return Err(PartitionError::Crossing);
    }
    if !pi.same_block(0, top) {
        return Err(PartitionError::FrameSplit);
    }
    if let Some(b) = pi.blocks().iter().find(|b| b.len() == 1) {
        return Err(PartitionError::SingletonBlock(b[0]));
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut covered: Vec<u32> = Vec::new();
    for b in pi.blocks() {
        if b[0] == 0 {
            continue;
        }
        let (min, max) = (b[0], b[b.len() - 1]);
        blocks.push(vec![min, max]);
        covered.push(min);
        covered.push(max);
    }
    covered.sort_unstable();
    for e in 1..top {
        if covered.binary_search(&e).is_err() {
            blocks.push(vec![e]);
        }
    }
    PartialPairing::new(SetPartition::new(blocks)?)
}
