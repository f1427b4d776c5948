//! Indexed binary min-heap with decrease-key.
//!
//! Vertices are identified by dense `0..n` ids; a position table maps
//! each id to its slot in the heap array, so `decrease_key` can sift a
//! vertex up from wherever it currently sits in `O(log n)`.

/// Min-heap over vertex ids `0..n` keyed by `f64` (ordered by
/// `total_cmp`, so `+inf` keys are legal and sort last).
#[derive(Debug)]
pub struct IndexedMinHeap {
    heap: Vec<usize>,        // heap[slot] = vertex
    pos: Vec<Option<usize>>, // pos[vertex] = slot, None once popped
    key: Vec<f64>,
}

impl IndexedMinHeap {
    /// Builds a heap containing every vertex in `0..n`, all with key
    /// `+inf`.
    pub fn new(n: usize) -> Self {
        IndexedMinHeap {
            heap: (0..n).collect(),
            pos: (0..n).map(Some).collect(),
            key: vec![f64::INFINITY; n],
        }
    }

    /// Whether `v` is still in the heap (not yet popped).
    pub fn contains(&self, v: usize) -> bool {
        self.pos[v].is_some()
    }

    /// Current key of `v`, which must still be in the heap.
    pub fn key(&self, v: usize) -> f64 {
        debug_assert!(self.contains(v), "vertex {v} was already popped");
        self.key[v]
    }

    /// The minimum entry as `(vertex, key)`, without removing it.
    pub fn peek_min(&self) -> Option<(usize, f64)> {
        self.heap.first().map(|&v| (v, self.key[v]))
    }

    /// Removes and returns the minimum entry as `(vertex, key)`.
    pub fn pop_min(&mut self) -> Option<(usize, f64)> {
        let (&min, &last) = (self.heap.first()?, self.heap.last()?);
        self.pos[min] = None;
        self.heap[0] = last;
        self.heap.pop();
        if !self.heap.is_empty() {
            self.pos[last] = Some(0);
            self.sift_down(0);
        }
        Some((min, self.key[min]))
    }

    /// Lowers the key of `v` (still in the heap) to `new_key`, which
    /// must not exceed its current key.
    pub fn decrease_key(&mut self, v: usize, new_key: f64) {
        let slot = self.pos[v].expect("decrease_key on a popped vertex");
        debug_assert!(
            new_key.total_cmp(&self.key[v]).is_le(),
            "decrease_key raising {} to {new_key} on vertex {v}",
            self.key[v]
        );
        self.key[v] = new_key;
        self.sift_up(slot);
    }

    fn less(&self, a: usize, b: usize) -> bool {
        self.key[self.heap[a]].total_cmp(&self.key[self.heap[b]]).is_lt()
    }

    fn swap_slots(&mut self, a: usize, b: usize) {
        self.heap.swap(a, b);
        self.pos[self.heap[a]] = Some(a);
        self.pos[self.heap[b]] = Some(b);
    }

    fn sift_up(&mut self, mut slot: usize) {
        while slot > 0 {
            let parent = (slot - 1) / 2;
            if !self.less(slot, parent) {
                break;
            }
            self.swap_slots(slot, parent);
            slot = parent;
        }
    }

    fn sift_down(&mut self, mut slot: usize) {
        loop {
            let mut smallest = slot;
            for child in [2 * slot + 1, 2 * slot + 2] {
                if child < self.heap.len() && self.less(child, smallest) {
                    smallest = child;
                }
            }
            if smallest == slot {
                return;
            }
            self.swap_slots(slot, smallest);
            slot = smallest;
        }
    }
}
