//! Site-based operation accounting.
//!
//! A multiplication is counted when its constant operand lies outside GF(2);
//! an addition is counted whenever two generic field values are combined.
//! Counts depend on the schedule only, never on runtime operand values.

use crate::field::FieldElement;

/// Which tally an addition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AddStage {
    /// Additions inside the multiplicative core (evaluators, dense field blocks).
    Field,
    /// Additions performed by binary pre/post matrices.
    Binary,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub mults: u64,
    pub field_adds: u64,
    pub binary_stage_adds: u64,
}

impl OpCounter {
    pub const fn new() -> OpCounter {
        OpCounter { mults: 0, field_adds: 0, binary_stage_adds: 0 }
    }

    pub fn reset(&mut self) {
        *self = OpCounter::new();
    }

    pub fn total_adds(&self) -> u64 {
        self.field_adds + self.binary_stage_adds
    }

    /// Records one multiplication site by `constant`; free when the constant is 0 or 1.
    #[inline]
    pub fn count_mult_site(&mut self, constant: FieldElement) {
        if !constant.is_binary() {
            self.mults += 1;
        }
    }

    #[inline]
    pub fn count_add_site(&mut self, stage: AddStage) {
        self.count_adds(stage, 1);
    }

    #[inline]
    pub fn count_adds(&mut self, stage: AddStage, k: usize) {
        match stage {
            AddStage::Field => self.field_adds += k as u64,
            AddStage::Binary => self.binary_stage_adds += k as u64,
        }
    }
}

impl core::ops::AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: OpCounter) {
        self.mults += rhs.mults;
        self.field_adds += rhs.field_adds;
        self.binary_stage_adds += rhs.binary_stage_adds;
    }
}

/// Free-function form of [`OpCounter::count_mult_site`].
pub fn count_mult_site(counter: &mut OpCounter, constant: FieldElement) {
    counter.count_mult_site(constant);
}

/// Free-function form of [`OpCounter::count_add_site`].
pub fn count_add_site(counter: &mut OpCounter, stage: AddStage) {
    counter.count_add_site(stage);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_constants_are_free() {
        let mut c = OpCounter::new();
        count_mult_site(&mut c, FieldElement::ONE);
        count_mult_site(&mut c, FieldElement::ZERO);
        assert_eq!(c.mults, 0);
        count_mult_site(&mut c, FieldElement(0b0110));
        assert_eq!(c.mults, 1);
    }

    #[test]
    fn add_stages() {
        let mut c = OpCounter::new();
        count_add_site(&mut c, AddStage::Field);
        c.count_adds(AddStage::Binary, 5);
        assert_eq!((c.field_adds, c.binary_stage_adds, c.total_adds()), (1, 5, 6));
        c.reset();
        assert_eq!(c, OpCounter::default());
    }
}
