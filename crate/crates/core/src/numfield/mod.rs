//! Exact rationals, polynomials over Q, number fields with a chosen complex
//! embedding, and certified root isolation.

pub mod algebraic;
pub mod complex;
pub mod field;
pub mod poly;
pub mod rational;
pub mod real_roots;
pub mod roots;

pub use complex::{ComplexInterval, RectDescriptor};
pub use field::{FieldDescriptor, FieldElement, FieldError, Irreducibility, NumberField};
pub use poly::QPoly;
pub use rational::BigRat;
