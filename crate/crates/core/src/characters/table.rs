use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::murnaghan_nakayama::mn_character;
use super::partition::{dimension, partitions_of, Partition};
use crate::exact_arith::ExactInt;
use crate::permutations::{class_size, CycleType};

/// Full character table of `S_n`, rows indexed by partitions and columns by
/// cycle types, both in [`partitions_of`] order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    classes: Vec<CycleType>,
    class_index: HashMap<CycleType, usize>,
    dims: Vec<ExactInt>,
    class_sizes: Vec<ExactInt>,
    // values[row][col]
    values: Vec<Vec<ExactInt>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let classes = CycleType::all(n);
        let values = partitions
            .iter()
            .map(|lam| {
                classes
                    .iter()
                    .map(|t| mn_character(lam, t).expect("sizes agree"))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            dims: partitions.iter().map(dimension).collect(),
            class_sizes: classes.iter().map(class_size).collect(),
            class_index: classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect(),
            partitions,
            classes,
            values,
        }
    }

    /// Shared, lazily built table for `S_n`.
    pub fn cached(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().expect("table cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        // built outside the lock; a racing duplicate build is harmless
        let table = Arc::new(CharacterTable::new(n));
        let mut guard = cache.lock().expect("table cache poisoned");
        Arc::clone(guard.entry(n).or_insert(table))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn dimensions(&self) -> &[ExactInt] {
        &self.dims
    }

    pub fn class_sizes(&self) -> &[ExactInt] {
        &self.class_sizes
    }

    pub fn class_index(&self, t: &CycleType) -> Option<usize> {
        self.class_index.get(t).copied()
    }

    /// `χ^{partitions[row]}(classes[col])`.
    pub fn value(&self, row: usize, col: usize) -> &ExactInt {
        &self.values[row][col]
    }
}
