//! Node indices are 0-based in memory and 1-based in every serialized report.

use serde::{Serialize, Serializer};

pub(crate) trait Shift {
    type Out: Serialize;
    fn shift(&self) -> Self::Out;
}

impl Shift for usize {
    type Out = usize;
    fn shift(&self) -> usize {
        self + 1
    }
}

impl<T: Shift> Shift for Vec<T> {
    type Out = Vec<T::Out>;
    fn shift(&self) -> Self::Out {
        self.iter().map(Shift::shift).collect()
    }
}

impl<A: Shift, B: Shift> Shift for (A, B) {
    type Out = (A::Out, B::Out);
    fn shift(&self) -> Self::Out {
        (self.0.shift(), self.1.shift())
    }
}

impl<T: Shift> Shift for Option<T> {
    type Out = Option<T::Out>;
    fn shift(&self) -> Self::Out {
        self.as_ref().map(Shift::shift)
    }
}

pub(crate) fn ser<T: Shift, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    v.shift().serialize(s)
}
