//! Exact solver: alternating-tree search with blossom contraction.

use std::cmp::Ordering;

use crate::graph::Vertex;
use crate::matching::Matching;
use crate::sorted::SortedGraph;
use crate::weight::Weight;

/// Toggles for the two search-reuse refinements of the exact solver.
///
/// Both default to on; turning them off yields the plain one-search-per-free-
/// vertex algorithm, which the test suite uses to confirm the refinements
/// never change the computed weight vector.
#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    /// Remember every vertex visited by a failed search and skip those
    /// vertices — as roots and during exploration — until the next
    /// successful augmentation invalidates the marks.  While the matching
    /// is unchanged, a failed region can neither contain nor lead to a free
    /// vertex, so skipping it cannot lose an augmenting path.
    pub reuse_failed_searches: bool,
    /// Stop a search as soon as it reaches a free vertex whose weight
    /// equals that of the heaviest not-yet-processed free vertex.  No
    /// reachable free vertex can weigh more, so the search result is
    /// already optimal at that point.
    pub stop_at_next_weight: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            reuse_failed_searches: true,
            stop_at_next_weight: true,
        }
    }
}

/// Maximum vertex-weighted matching, both refinements enabled.
pub fn exact_mvm<W: Weight>(sorted: &SortedGraph<'_, W>) -> Matching {
    exact_mvm_with_options(sorted, ExactOptions::default())
}

/// Maximum vertex-weighted matching.
///
/// Processes free vertices in order of decreasing weight.  From each root it
/// grows one alternating tree (contracting blossoms as they appear) that
/// reaches every free vertex an augmenting path can end at, picks the
/// heaviest such terminus (lowest id on ties), re-runs the search stopped at
/// exactly that terminus to thread fresh parent pointers, and augments along
/// them.  A vertex whose search fails stays unmatched forever — a classical
/// exchange argument shows no later augmentation can help it — so each
/// vertex roots at most one tree (grown at most twice).  A search scans
/// each edge O(1) times; contraction walks add rethreading work that the
/// stamped union-find keeps near-linear outside adversarially nested
/// blossom chains.
pub fn exact_mvm_with_options<W: Weight>(
    sorted: &SortedGraph<'_, W>,
    options: ExactOptions,
) -> Matching {
    let n = sorted.graph().vertex_count();
    let mut matching = Matching::new(n);
    let mut scratch = SearchScratch::new(n);
    let order = sorted.vertex_order();
    // Monotone pointer to the heaviest free vertex after the current root;
    // vertices it skips are matched and stay matched.
    let mut next_free = 0usize;

    for i in 0..order.len() {
        let root = order[i];
        if matching.is_matched(root) {
            continue;
        }
        if options.reuse_failed_searches && scratch.failed[root as usize] {
            // A search from this vertex already failed and the matching has
            // not changed since: it would fail again.
            continue;
        }
        let stop_weight = if options.stop_at_next_weight {
            if next_free <= i {
                next_free = i + 1;
            }
            while next_free < order.len() && matching.is_matched(order[next_free]) {
                next_free += 1;
            }
            (next_free < order.len()).then(|| sorted.weight(order[next_free]))
        } else {
            None
        };

        let found = scratch.search(
            sorted,
            &matching,
            root,
            stop_weight,
            options.reuse_failed_searches,
            None,
        );
        match found {
            Some(terminus) => {
                // Re-derive the tree stopped exactly at the chosen terminus;
                // only a walk started the moment its terminus is reached is
                // guaranteed to lead back to the root (see `search`).
                let confirmed = scratch
                    .search(
                        sorted,
                        &matching,
                        root,
                        None,
                        options.reuse_failed_searches,
                        Some(terminus),
                    )
                    .expect("terminus seen by the discovery pass is reachable");
                debug_assert_eq!(confirmed, terminus);
                scratch.augment(&mut matching, terminus, sorted);
                scratch.clear_failed();
            }
            None => {
                if options.reuse_failed_searches {
                    scratch.commit_failed();
                }
            }
        }
    }
    matching
}

/// Reusable state for the alternating-tree searches of [`exact_mvm`].
///
/// All per-search arrays are version-stamped: starting a search bumps the
/// stamp instead of clearing, so a search costs only what it touches.
/// Blossom membership is kept as a union-find over stamped base pointers
/// with path compression.
pub struct SearchScratch {
    stamp: u32,
    outer: Vec<u32>,
    parent: Vec<Vertex>,
    parent_stamp: Vec<u32>,
    base: Vec<Vertex>,
    base_stamp: Vec<u32>,
    seen: Vec<u32>,
    touched: Vec<Vertex>,
    lca_mark: Vec<u32>,
    lca_stamp: u32,
    queue: Vec<Vertex>,
    pending_bases: Vec<Vertex>,
    failed: Vec<bool>,
    failed_list: Vec<Vertex>,
    path_buf: Vec<Vertex>,
}

impl SearchScratch {
    pub fn new(vertex_count: usize) -> Self {
        SearchScratch {
            stamp: 0,
            outer: vec![0; vertex_count],
            parent: vec![0; vertex_count],
            parent_stamp: vec![0; vertex_count],
            base: vec![0; vertex_count],
            base_stamp: vec![0; vertex_count],
            seen: vec![0; vertex_count],
            touched: Vec::new(),
            lca_mark: vec![0; vertex_count],
            lca_stamp: 0,
            queue: Vec::new(),
            pending_bases: Vec::new(),
            failed: vec![false; vertex_count],
            failed_list: Vec::new(),
            path_buf: Vec::new(),
        }
    }

    #[inline]
    fn touch(&mut self, v: Vertex) {
        if self.seen[v as usize] != self.stamp {
            self.seen[v as usize] = self.stamp;
            self.touched.push(v);
        }
    }

    #[inline]
    fn is_outer(&self, v: Vertex) -> bool {
        self.outer[v as usize] == self.stamp
    }

    #[inline]
    fn set_outer(&mut self, v: Vertex) {
        self.outer[v as usize] = self.stamp;
        self.touch(v);
    }

    #[inline]
    fn has_parent(&self, v: Vertex) -> bool {
        self.parent_stamp[v as usize] == self.stamp
    }

    #[inline]
    fn set_parent(&mut self, v: Vertex, p: Vertex) {
        self.parent[v as usize] = p;
        self.parent_stamp[v as usize] = self.stamp;
        self.touch(v);
    }

    /// Blossom base of `v`: follows stamped pointers, compressing the path.
    fn find_base(&mut self, v: Vertex) -> Vertex {
        let mut root = v;
        while self.base_stamp[root as usize] == self.stamp {
            root = self.base[root as usize];
        }
        let mut cur = v;
        while self.base_stamp[cur as usize] == self.stamp {
            let next = self.base[cur as usize];
            self.base[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn union_base(&mut self, b: Vertex, into: Vertex) {
        if b != into {
            self.base[b as usize] = into;
            self.base_stamp[b as usize] = self.stamp;
        }
    }

    /// Grows the alternating tree from `root`.
    ///
    /// With `target` unset this is the discovery pass: it explores every
    /// reachable terminus and returns the best one (heaviest, lowest id on
    /// ties), or `None` if the search fails; `stop_weight` short-circuits it
    /// once a terminus of that weight appears.  With `target` set it is the
    /// confirmation pass: all other free vertices are invisible and the
    /// search halts the instant `target` is reached, leaving every parent
    /// pointer on the augmenting walk freshly threaded.  The walk cannot be
    /// taken from the discovery pass directly — a contraction that happens
    /// after a terminus was first seen rethreads parents around the new
    /// blossom, and the stale walk may no longer lead back to the root.
    fn search<W: Weight>(
        &mut self,
        sorted: &SortedGraph<'_, W>,
        matching: &Matching,
        root: Vertex,
        stop_weight: Option<W>,
        skip_failed: bool,
        target: Option<Vertex>,
    ) -> Option<Vertex> {
        self.stamp += 1;
        self.queue.clear();
        self.touched.clear();
        self.set_outer(root);
        self.queue.push(root);

        let mut best: Option<(W, Vertex)> = None;
        let mut head = 0usize;
        'bfs: while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let partner_x = matching.partner(x);
            for &y in sorted.sorted_neighbors(x) {
                if skip_failed && self.failed[y as usize] {
                    continue;
                }
                if partner_x == Some(y) {
                    continue;
                }
                if self.is_outer(y) {
                    let bx = self.find_base(x);
                    let by = self.find_base(y);
                    if bx != by {
                        self.contract(matching, x, y, bx, by);
                    }
                    continue;
                }
                if self.has_parent(y) {
                    continue; // inner vertex or already-recorded terminus
                }
                match matching.partner(y) {
                    None => {
                        if let Some(t) = target {
                            if y == t {
                                self.set_parent(y, x);
                                return Some(y);
                            }
                            continue; // other termini stay invisible
                        }
                        self.set_parent(y, x);
                        let wy = sorted.weight(y);
                        let better = match best {
                            None => true,
                            Some((bw, bt)) => match wy.cmp_w(&bw) {
                                Ordering::Greater => true,
                                Ordering::Equal => y < bt,
                                Ordering::Less => false,
                            },
                        };
                        if better {
                            best = Some((wy, y));
                        }
                        if let Some(sw) = stop_weight {
                            if wy.cmp_w(&sw) == Ordering::Equal {
                                break 'bfs; // nothing reachable can be heavier
                            }
                        }
                    }
                    Some(z) => {
                        debug_assert!(!skip_failed || !self.failed[z as usize]);
                        self.set_parent(y, x);
                        self.set_outer(z);
                        self.queue.push(z);
                    }
                }
            }
        }
        best.map(|(_, t)| t)
    }

    /// Contracts the odd cycle closed by tree edge `(x, y)`.
    ///
    /// Both cycle walks must run against the blossom structure as it stood
    /// before this contraction — a walk often crosses several vertices of
    /// one old blossom, and merging that blossom's base into `cb` while the
    /// walk is still inside it would end the walk early, leaving the rest of
    /// the cycle without rethreaded parents.  So the walks only collect the
    /// bases they cross and the merge happens after both have finished.
    fn contract(&mut self, matching: &Matching, x: Vertex, y: Vertex, bx: Vertex, by: Vertex) {
        let cb = self.cycle_base(matching, bx, by);
        debug_assert!(self.pending_bases.is_empty());
        self.mark_path(matching, x, cb, y);
        self.mark_path(matching, y, cb, x);
        while let Some(b) = self.pending_bases.pop() {
            self.union_base(b, cb);
        }
    }

    /// First common blossom base of the tree paths from bases `bx` and `by`
    /// to the root.
    fn cycle_base(&mut self, matching: &Matching, bx: Vertex, by: Vertex) -> Vertex {
        self.lca_stamp += 1;
        let mut v = bx;
        loop {
            self.lca_mark[v as usize] = self.lca_stamp;
            match matching.partner(v) {
                None => break, // the root
                Some(z) => {
                    debug_assert!(self.has_parent(z), "unthreaded partner on base walk");
                    let p = self.parent[z as usize];
                    v = self.find_base(p);
                }
            }
        }
        let mut u = by;
        while self.lca_mark[u as usize] != self.lca_stamp {
            let z = matching.partner(u).expect("non-root base is matched");
            let p = self.parent[z as usize];
            u = self.find_base(p);
        }
        u
    }

    /// Walks one half of the new odd cycle from `v` down to `cb`, recording
    /// traversed blossom bases in `pending_bases` (merged by [`Self::contract`]
    /// once both halves are done), rethreading parent pointers so an
    /// augmenting walk can cross the cycle, and queueing former inner
    /// vertices that just became outer.
    fn mark_path(&mut self, matching: &Matching, mut v: Vertex, cb: Vertex, mut child: Vertex) {
        loop {
            let bv = self.find_base(v);
            if bv == cb {
                break;
            }
            let pv = matching
                .partner(v)
                .expect("outer non-base cycle vertex is matched");
            let bpv = self.find_base(pv);
            self.pending_bases.push(bv);
            self.pending_bases.push(bpv);
            self.set_parent(v, child);
            if !self.is_outer(pv) {
                self.set_outer(pv);
                self.queue.push(pv);
            }
            child = pv;
            debug_assert!(self.has_parent(pv), "stale parent read in mark_path");
            v = self.parent[pv as usize];
        }
    }

    /// Flips the alternating path from `terminus` back to the search root.
    fn augment<W: Weight>(
        &mut self,
        matching: &mut Matching,
        terminus: Vertex,
        sorted: &SortedGraph<'_, W>,
    ) {
        self.path_buf.clear();
        let mut cur = Some(terminus);
        while let Some(c) = cur {
            debug_assert!(self.has_parent(c));
            let p = self.parent[c as usize];
            self.path_buf.push(c);
            self.path_buf.push(p);
            debug_assert!(
                self.path_buf.len() <= 2 * matching.vertex_count(),
                "augmenting walk revisited a vertex"
            );
            cur = matching.partner(p);
        }
        #[cfg(debug_assertions)]
        super::debug_check_path(sorted.graph(), &self.path_buf);
        #[cfg(not(debug_assertions))]
        let _ = sorted;
        matching.augment(&self.path_buf);
    }

    /// Freezes this search's visited set into the persistent failed marks.
    fn commit_failed(&mut self) {
        for &v in &self.touched {
            if !self.failed[v as usize] {
                self.failed[v as usize] = true;
                self.failed_list.push(v);
            }
        }
    }

    /// Invalidates all failed marks (the matching changed).
    fn clear_failed(&mut self) {
        while let Some(v) = self.failed_list.pop() {
            self.failed[v as usize] = false;
        }
    }
}
