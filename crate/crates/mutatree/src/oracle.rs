//! Brute-force ground truth: exhaustive enumeration of trees, mutator
//! placements and model-specific configuration data at small sizes, counting
//! by direct inspection. No generating functions anywhere in this module.
//!
//! Trees serialize as balanced parentheses with one pair per edge (the
//! three-edge path is `((()))`, three leaves under the root are `()()()`,
//! the one-vertex tree is the empty string). Vertices are addressed by
//! preorder index, root = 0.

use crate::models::MutationModel;
use crate::seqio::CountRow;
use num_bigint::BigInt;
use std::fmt;

/// Hard ceiling on edge counts for exhaustive generation.
pub const GEN_LIMIT: usize = 12;
/// Ceiling for materializing embedded-new-type colorings.
pub const ENT_ENUM_LIMIT: usize = 8;
/// Ceiling for the embedded-new-type product-count path.
pub const ENT_COUNT_LIMIT: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("size {requested} exceeds the enumeration limit {limit}")]
    SizeLimit { requested: usize, limit: usize },
    #[error("malformed parentheses string at byte {0}")]
    Parse(usize),
}

/// Rooted plane tree; children are ordered left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn leaf() -> OrderedTree {
        OrderedTree { children: vec![] }
    }

    pub fn edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edges()).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.edges() + 1
    }

    /// Parse the canonical one-pair-per-edge form; inverse of `to_string`.
    pub fn parse(s: &str) -> Result<OrderedTree, OracleError> {
        let bytes = s.as_bytes();
        let mut stack = vec![OrderedTree::leaf()];
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => stack.push(OrderedTree::leaf()),
                b')' => {
                    let done = stack.pop().ok_or(OracleError::Parse(i))?;
                    match stack.last_mut() {
                        Some(parent) => parent.children.push(done),
                        None => return Err(OracleError::Parse(i)),
                    }
                }
                _ => return Err(OracleError::Parse(i)),
            }
        }
        if stack.len() != 1 {
            return Err(OracleError::Parse(bytes.len()));
        }
        Ok(stack.pop().unwrap())
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.children {
            write!(f, "({})", c)?;
        }
        Ok(())
    }
}

/// All ordered trees with `n_edges` edges, in lexicographic order of their
/// balanced-parentheses form ('(' before ')').
pub fn gen_trees(n_edges: usize) -> Result<Vec<OrderedTree>, OracleError> {
    if n_edges > GEN_LIMIT {
        return Err(OracleError::SizeLimit {
            requested: n_edges,
            limit: GEN_LIMIT,
        });
    }
    let mut out = Vec::new();
    let mut buf = String::with_capacity(2 * n_edges);
    gen_dyck(&mut buf, n_edges, 0, &mut out);
    Ok(out)
}

fn gen_dyck(buf: &mut String, open_left: usize, close_due: usize, out: &mut Vec<OrderedTree>) {
    if open_left == 0 && close_due == 0 {
        out.push(OrderedTree::parse(buf).expect("generated words are balanced"));
        return;
    }
    if open_left > 0 {
        buf.push('(');
        gen_dyck(buf, open_left - 1, close_due + 1, out);
        buf.pop();
    }
    if close_due > 0 {
        buf.push(')');
        gen_dyck(buf, open_left, close_due - 1, out);
        buf.pop();
    }
}

/// All complete binary trees (every vertex has 0 or 2 children) with
/// `n_internal` internal vertices.
pub fn gen_binary_trees(n_internal: usize) -> Result<Vec<OrderedTree>, OracleError> {
    if n_internal > GEN_LIMIT {
        return Err(OracleError::SizeLimit {
            requested: n_internal,
            limit: GEN_LIMIT,
        });
    }
    Ok(gen_binary(n_internal))
}

fn gen_binary(n: usize) -> Vec<OrderedTree> {
    if n == 0 {
        return vec![OrderedTree::leaf()];
    }
    let mut out = Vec::new();
    for left in 0..n {
        for l in gen_binary(left) {
            for r in gen_binary(n - 1 - left) {
                out.push(OrderedTree {
                    children: vec![l.clone(), r],
                });
            }
        }
    }
    out
}

/// Preorder flattening of a tree: children lists, parents, depths and
/// subtree sizes, all indexed by preorder position.
pub struct Layout {
    pub children: Vec<Vec<usize>>,
    pub parent: Vec<Option<usize>>,
    pub depth: Vec<usize>,
    pub size: Vec<usize>,
}

impl Layout {
    pub fn of(tree: &OrderedTree) -> Layout {
        let mut l = Layout {
            children: vec![],
            parent: vec![],
            depth: vec![],
            size: vec![],
        };
        l.walk(tree, None, 0);
        l
    }

    fn walk(&mut self, node: &OrderedTree, parent: Option<usize>, depth: usize) -> usize {
        let id = self.children.len();
        self.children.push(Vec::with_capacity(node.children.len()));
        self.parent.push(parent);
        self.depth.push(depth);
        self.size.push(1);
        for c in &node.children {
            let cid = self.walk(c, Some(id), depth + 1);
            self.children[id].push(cid);
            self.size[id] += self.size[cid];
        }
        id
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len()
    }

    /// Preorder indices of the subtree rooted at v (v first).
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        // preorder ids of a subtree are contiguous
        (v..v + self.size[v]).collect()
    }

    /// The chain v, rightmost child of v, ... down to a leaf.
    pub fn rightmost_chain(&self, v: usize) -> Vec<usize> {
        let mut chain = vec![v];
        let mut cur = v;
        while let Some(&last) = self.children[cur].last() {
            chain.push(last);
            cur = last;
        }
        chain
    }
}

/// Model-specific configuration data beyond (tree, mutator).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MutExtra {
    None,
    /// Toggle split position s, 0 <= s <= degree(mutator); children after
    /// position s are new type.
    Split(usize),
    /// Explicit new-type vertex set (embedded-new-type model), sorted.
    NewType(Vec<usize>),
}

/// One admissible configuration: a tree, a mutator vertex and the extra
/// data the model calls for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutConfig {
    pub tree: OrderedTree,
    pub mutator: usize,
    pub extra: MutExtra,
}

impl fmt::Display for MutConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={}", self.tree, self.mutator)?;
        match &self.extra {
            MutExtra::None => Ok(()),
            MutExtra::Split(s) => write!(f, " s={}", s),
            MutExtra::NewType(set) => {
                let items: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                write!(f, " N={{{}}}", items.join(","))
            }
        }
    }
}

/// The new-type vertex set of a configuration under the given model.
pub fn config_new_type_set(model: MutationModel, cfg: &MutConfig) -> Vec<usize> {
    let layout = Layout::of(&cfg.tree);
    new_type_set(model, &layout, cfg.mutator, &cfg.extra)
}

fn new_type_set(model: MutationModel, layout: &Layout, m: usize, extra: &MutExtra) -> Vec<usize> {
    match model {
        MutationModel::ShortLived => {
            vec![m, *layout.children[m].last().expect("rightmost child exists")]
        }
        MutationModel::Toggle | MutationModel::ToggleH1 => {
            let s = match extra {
                MutExtra::Split(s) => *s,
                _ => unreachable!("toggle configurations carry a split"),
            };
            let mut set = vec![m];
            for &c in &layout.children[m][s..] {
                set.extend(layout.subtree(c));
            }
            set.sort_unstable();
            set
        }
        MutationModel::Ent => match extra {
            MutExtra::NewType(set) => set.clone(),
            _ => unreachable!("ent configurations carry a set"),
        },
        MutationModel::RightBranch => {
            let rc = *layout.children[m].last().expect("rightmost child exists");
            let mut set = vec![m];
            set.extend(layout.subtree(rc));
            set.sort_unstable();
            set
        }
        MutationModel::RightPath | MutationModel::RightPathStar => {
            let mut set = layout.rightmost_chain(m);
            set.sort_unstable();
            set
        }
        MutationModel::BinaryComplete => layout.subtree(m),
    }
}

fn check_size(model: MutationModel, n: usize) -> Result<(), OracleError> {
    let limit = match model {
        MutationModel::Ent => ENT_ENUM_LIMIT,
        _ => GEN_LIMIT,
    };
    if n > limit {
        return Err(OracleError::SizeLimit {
            requested: n,
            limit,
        });
    }
    Ok(())
}

fn trees_for(model: MutationModel, n: usize) -> Result<Vec<OrderedTree>, OracleError> {
    match model {
        MutationModel::BinaryComplete => gen_binary_trees(n),
        _ => gen_trees(n),
    }
}

fn for_each_config<F>(model: MutationModel, n: usize, mut f: F) -> Result<(), OracleError>
where
    F: FnMut(&OrderedTree, &Layout, usize, &MutExtra, &[usize]),
{
    check_size(model, n)?;
    for tree in trees_for(model, n)? {
        let layout = Layout::of(&tree);
        for m in 0..layout.len() {
            let deg = layout.degree(m);
            match model {
                MutationModel::ShortLived => {
                    // rightmost child must exist and be a leaf
                    if deg >= 1 && layout.degree(*layout.children[m].last().unwrap()) == 0 {
                        let extra = MutExtra::None;
                        let set = new_type_set(model, &layout, m, &extra);
                        f(&tree, &layout, m, &extra, &set);
                    }
                }
                MutationModel::Toggle => {
                    for s in 0..=deg {
                        let extra = MutExtra::Split(s);
                        let set = new_type_set(model, &layout, m, &extra);
                        f(&tree, &layout, m, &extra, &set);
                    }
                }
                MutationModel::ToggleH1 => {
                    if layout.depth[m] == 1 {
                        for s in 0..=deg {
                            let extra = MutExtra::Split(s);
                            let set = new_type_set(model, &layout, m, &extra);
                            f(&tree, &layout, m, &extra, &set);
                        }
                    }
                }
                MutationModel::Ent => {
                    for set in ent_sets(&layout, m) {
                        let extra = MutExtra::NewType(set);
                        let view = match &extra {
                            MutExtra::NewType(s) => s.as_slice(),
                            _ => unreachable!(),
                        };
                        f(&tree, &layout, m, &extra, view);
                    }
                }
                MutationModel::RightBranch | MutationModel::RightPathStar => {
                    if deg >= 1 {
                        let extra = MutExtra::None;
                        let set = new_type_set(model, &layout, m, &extra);
                        f(&tree, &layout, m, &extra, &set);
                    }
                }
                MutationModel::RightPath | MutationModel::BinaryComplete => {
                    let extra = MutExtra::None;
                    let set = new_type_set(model, &layout, m, &extra);
                    f(&tree, &layout, m, &extra, &set);
                }
            }
        }
    }
    Ok(())
}

/// All down-closed new-type sets rooted at `m`: every set contains `m`, and
/// the parent of every other member is in the set. Sorted ascending.
fn ent_sets(layout: &Layout, m: usize) -> Vec<Vec<usize>> {
    let mut sets = vec![vec![m]];
    for &c in &layout.children[m] {
        let child_sets = ent_sets(layout, c);
        let mut next = Vec::with_capacity(sets.len() * (1 + child_sets.len()));
        for s in &sets {
            next.push(s.clone());
            for cs in &child_sets {
                let mut merged = s.clone();
                merged.extend_from_slice(cs);
                next.push(merged);
            }
        }
        sets = next;
    }
    for s in &mut sets {
        s.sort_unstable();
    }
    sets
}

/// Every admissible configuration at size n, exactly once.
pub fn enumerate_configs(model: MutationModel, n: usize) -> Result<Vec<MutConfig>, OracleError> {
    let mut out = Vec::new();
    for_each_config(model, n, |tree, _layout, m, extra, _set| {
        out.push(MutConfig {
            tree: tree.clone(),
            mutator: m,
            extra: extra.clone(),
        });
    })?;
    Ok(out)
}

/// Aggregate counts at size n: configurations, total vertices, total
/// new-type vertices. For the embedded-new-type model sizes 9..=11 are
/// served by the product-count path (no materialized colorings).
pub fn count_row(model: MutationModel, n: usize) -> Result<CountRow, OracleError> {
    if model == MutationModel::Ent && n > ENT_ENUM_LIMIT {
        if n > ENT_COUNT_LIMIT {
            return Err(OracleError::SizeLimit {
                requested: n,
                limit: ENT_COUNT_LIMIT,
            });
        }
        return ent_count_row_product(n);
    }
    let mut configs: u128 = 0;
    let mut vertices: u128 = 0;
    let mut new_type: u128 = 0;
    for_each_config(model, n, |_tree, layout, _m, _extra, set| {
        configs += 1;
        vertices += layout.len() as u128;
        new_type += set.len() as u128;
    })?;
    Ok(CountRow {
        n,
        trees: BigInt::from(configs),
        vertices: BigInt::from(vertices),
        new_type: BigInt::from(new_type),
    })
}

/// Second, independent counting path for embedded-new-type trees: per
/// mutator, the number of admissible colorings and their total size follow
/// from a product over children, without materializing any coloring.
pub fn ent_count_row_product(n: usize) -> Result<CountRow, OracleError> {
    if n > ENT_COUNT_LIMIT {
        return Err(OracleError::SizeLimit {
            requested: n,
            limit: ENT_COUNT_LIMIT,
        });
    }
    let mut configs: u128 = 0;
    let mut vertices: u128 = 0;
    let mut new_type: u128 = 0;
    for tree in gen_trees(n)? {
        let layout = Layout::of(&tree);
        // count[v]: admissible sets in the subtree of v containing v
        // weight[v]: total size of those sets
        let mut count = vec![0u128; layout.len()];
        let mut weight = vec![0u128; layout.len()];
        for v in (0..layout.len()).rev() {
            let (mut c, mut w) = (1u128, 1u128);
            for &u in &layout.children[v] {
                let include = count[u];
                w = w * (1 + include) + c * weight[u];
                c *= 1 + include;
            }
            count[v] = c;
            weight[v] = w;
        }
        for m in 0..layout.len() {
            configs += count[m];
            vertices += count[m] * layout.len() as u128;
            new_type += weight[m];
        }
    }
    Ok(CountRow {
        n,
        trees: BigInt::from(configs),
        vertices: BigInt::from(vertices),
        new_type: BigInt::from(new_type),
    })
}

/// Number of (tree with n edges, distinguished leaf) pairs, by inspection.
pub fn count_tree_leaf_pairs(n: usize) -> Result<BigInt, OracleError> {
    let mut total: u128 = 0;
    for tree in gen_trees(n)? {
        let layout = Layout::of(&tree);
        total += (0..layout.len()).filter(|&v| layout.degree(v) == 0).count() as u128;
    }
    Ok(BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treealg::catalan;
    use std::collections::HashSet;

    #[test]
    fn parse_print_round_trip() {
        for s in ["", "()", "((()))", "()()()", "(())()", "(()(()))"] {
            let t = OrderedTree::parse(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!(OrderedTree::parse(")(").is_err());
        assert!(OrderedTree::parse("(()").is_err());
        assert!(OrderedTree::parse("(x)").is_err());
    }

    #[test]
    fn gen_trees_counts_and_order() {
        assert_eq!(gen_trees(0).unwrap().len(), 1);
        assert_eq!(gen_trees(3).unwrap().len(), 5);
        assert_eq!(gen_trees(10).unwrap().len(), 16796);
        // lexicographic and duplicate-free
        let trees = gen_trees(5).unwrap();
        let words: Vec<String> = trees.iter().map(|t| t.to_string()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        let set: HashSet<&String> = words.iter().collect();
        assert_eq!(set.len(), words.len());
        assert!(matches!(
            gen_trees(13),
            Err(OracleError::SizeLimit { requested: 13, limit: 12 })
        ));
    }

    #[test]
    fn gen_binary_trees_counts() {
        assert_eq!(gen_binary_trees(2).unwrap().len(), 2);
        assert_eq!(gen_binary_trees(3).unwrap().len(), 5);
        for n in 0..=6 {
            let trees = gen_binary_trees(n).unwrap();
            assert_eq!(BigInt::from(trees.len()), catalan(n));
            for t in &trees {
                assert_eq!(t.vertex_count(), 2 * n + 1);
                let layout = Layout::of(t);
                for v in 0..layout.len() {
                    assert!(layout.degree(v) == 0 || layout.degree(v) == 2);
                }
            }
            let set: HashSet<String> = trees.iter().map(|t| t.to_string()).collect();
            assert_eq!(set.len(), trees.len());
        }
    }

    #[test]
    fn figure_counts() {
        let r = count_row(MutationModel::ShortLived, 3).unwrap();
        assert_eq!((r.trees, r.vertices, r.new_type), (6.into(), 24.into(), 12.into()));
        let r = count_row(MutationModel::Toggle, 2).unwrap();
        assert_eq!((r.trees, r.vertices, r.new_type), (10.into(), 30.into(), 16.into()));
        let r = count_row(MutationModel::ToggleH1, 3).unwrap();
        assert_eq!((r.trees, r.vertices, r.new_type), (14.into(), 56.into(), 21.into()));
        let r = count_row(MutationModel::Ent, 2).unwrap();
        assert_eq!((r.trees, r.vertices, r.new_type), (12.into(), 36.into(), 20.into()));
        let r = count_row(MutationModel::RightPathStar, 3).unwrap();
        assert_eq!((r.trees, r.vertices, r.new_type), (10.into(), 40.into(), 25.into()));
        let r = count_row(MutationModel::RightPath, 0).unwrap();
        assert_eq!((r.trees, r.vertices, r.new_type), (1.into(), 1.into(), 1.into()));
        let r = count_row(MutationModel::BinaryComplete, 2).unwrap();
        assert_eq!((r.trees, r.vertices, r.new_type), (10.into(), 50.into(), 22.into()));
    }

    #[test]
    fn toggle_split_count_per_vertex() {
        // configurations per tree and vertex = degree + 1
        for n in 0..=5 {
            let mut by_hand: u64 = 0;
            for tree in gen_trees(n).unwrap() {
                let layout = Layout::of(&tree);
                by_hand += (0..layout.len()).map(|v| layout.degree(v) as u64 + 1).sum::<u64>();
            }
            let row = count_row(MutationModel::Toggle, n).unwrap();
            assert_eq!(row.trees, BigInt::from(by_hand));
        }
    }

    #[test]
    fn right_path_chain_lengths() {
        for n in 0..=5 {
            let configs = enumerate_configs(MutationModel::RightPath, n).unwrap();
            for cfg in configs {
                let layout = Layout::of(&cfg.tree);
                let set = config_new_type_set(MutationModel::RightPath, &cfg);
                assert_eq!(set.len(), layout.rightmost_chain(cfg.mutator).len());
                assert!(set.contains(&cfg.mutator));
                assert!(set.len() <= n + 1);
            }
        }
    }

    #[test]
    fn ent_sets_are_down_closed() {
        for n in 0..=4 {
            for cfg in enumerate_configs(MutationModel::Ent, n).unwrap() {
                let layout = Layout::of(&cfg.tree);
                let set = match &cfg.extra {
                    MutExtra::NewType(s) => s.clone(),
                    _ => panic!("ent config without set"),
                };
                assert!(set.contains(&cfg.mutator));
                for &v in &set {
                    if v != cfg.mutator {
                        assert!(set.contains(&layout.parent[v].unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn ent_paths_agree() {
        for n in 0..=8 {
            let a = count_row(MutationModel::Ent, n).unwrap();
            let b = ent_count_row_product(n).unwrap();
            assert_eq!((a.trees, a.vertices, a.new_type), (b.trees, b.vertices, b.new_type));
        }
    }

    #[test]
    fn leaf_pairs_match_leaf_series() {
        let want: [i64; 7] = [1, 1, 3, 10, 35, 126, 462];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(count_tree_leaf_pairs(n).unwrap(), BigInt::from(*w));
        }
    }

    #[test]
    fn config_display() {
        let cfg = MutConfig {
            tree: OrderedTree::parse("(())()").unwrap(),
            mutator: 1,
            extra: MutExtra::Split(0),
        };
        assert_eq!(cfg.to_string(), "(())() m=1 s=0");
        let cfg = MutConfig {
            tree: OrderedTree::parse("()").unwrap(),
            mutator: 0,
            extra: MutExtra::NewType(vec![0, 1]),
        };
        assert_eq!(cfg.to_string(), "() m=0 N={0,1}");
    }
}
