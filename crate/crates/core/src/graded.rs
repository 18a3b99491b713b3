use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{DenseMatrix, Vector};
use crate::scalar::Field;

/// A family `{H_α}` of finite-dimensional spaces indexed by a finite group.
/// Zero-dimensional grades are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    field: Field,
    group: Arc<FiniteGroup>,
    dims: Vec<usize>,
}

impl GradedSpace {
    pub fn new(field: Field, group: Arc<FiniteGroup>, dims: Vec<usize>) -> Result<Self> {
        if dims.len() != group.size() {
            return Err(Error::Shape(format!(
                "{} grade dimensions for a group of order {}",
                dims.len(),
                group.size()
            )));
        }
        Ok(GradedSpace { field, group, dims })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, grade: usize) -> usize {
        self.dims[grade]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn grades(&self) -> std::ops::Range<usize> {
        self.group.elements()
    }

    /// Grades with a nonzero component.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.grades().filter(|&a| self.dims[a] > 0)
    }
}

/// A family of linear maps `H_α → K_{shift(α)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLinearMap {
    source: GradedSpace,
    target: GradedSpace,
    shift: Vec<usize>,
    blocks: Vec<DenseMatrix>,
}

impl GradedLinearMap {
    pub fn new(
        source: GradedSpace,
        target: GradedSpace,
        shift: Vec<usize>,
        blocks: Vec<DenseMatrix>,
    ) -> Result<Self> {
        let n = source.group.size();
        if shift.len() != n || blocks.len() != n {
            return Err(Error::Shape("graded map needs one block per grade".into()));
        }
        if shift.iter().any(|&s| s >= target.group.size()) {
            return Err(Error::Shape("grade shift out of range".into()));
        }
        for (a, block) in blocks.iter().enumerate() {
            let want = (target.dim(shift[a]), source.dim(a));
            if (block.rows(), block.cols()) != want {
                return Err(Error::Shape(format!(
                    "block for grade {} is {}x{}, expected {}x{}",
                    source.group.name(a),
                    block.rows(),
                    block.cols(),
                    want.0,
                    want.1
                )));
            }
            if block.field() != source.field {
                return Err(Error::FieldMismatch("graded map block field".into()));
            }
        }
        Ok(GradedLinearMap {
            source,
            target,
            shift,
            blocks,
        })
    }

    /// Map on `space` with grade shift `α ↦ α⁻¹`.
    pub fn grade_inverting(space: &GradedSpace, blocks: Vec<DenseMatrix>) -> Result<Self> {
        let shift = space.grades().map(|a| space.group.inv(a)).collect();
        Self::new(space.clone(), space.clone(), shift, blocks)
    }

    /// Map with identity grade shift between spaces over the same group.
    pub fn grade_preserving(
        source: &GradedSpace,
        target: &GradedSpace,
        blocks: Vec<DenseMatrix>,
    ) -> Result<Self> {
        if source.group != target.group {
            return Err(Error::Shape("grade-preserving map between different groups".into()));
        }
        let shift = source.grades().collect();
        Self::new(source.clone(), target.clone(), shift, blocks)
    }

    pub fn identity(space: &GradedSpace) -> Self {
        let blocks = space
            .grades()
            .map(|a| DenseMatrix::identity(space.field, space.dim(a)))
            .collect();
        Self::grade_preserving(space, space, blocks).expect("identity map")
    }

    pub fn source(&self) -> &GradedSpace {
        &self.source
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }

    pub fn shift(&self, grade: usize) -> usize {
        self.shift[grade]
    }

    pub fn shifts(&self) -> &[usize] {
        &self.shift
    }

    pub fn block(&self, grade: usize) -> &DenseMatrix {
        &self.blocks[grade]
    }

    pub fn blocks(&self) -> &[DenseMatrix] {
        &self.blocks
    }

    pub fn apply(&self, grade: usize, v: &[crate::scalar::Scalar]) -> Vector {
        self.blocks[grade].mul_vec(v)
    }

    pub fn has_identity_shift(&self) -> bool {
        self.source.group == self.target.group && self.shift.iter().enumerate().all(|(a, &s)| a == s)
    }

    pub fn has_inverting_shift(&self) -> bool {
        self.source.group == self.target.group
            && self
                .shift
                .iter()
                .enumerate()
                .all(|(a, &s)| self.source.group.inv(a) == s)
    }

    pub fn with_block(&self, grade: usize, block: DenseMatrix) -> Result<Self> {
        let mut blocks = self.blocks.clone();
        blocks[grade] = block;
        Self::new(self.source.clone(), self.target.clone(), self.shift.clone(), blocks)
    }
}
