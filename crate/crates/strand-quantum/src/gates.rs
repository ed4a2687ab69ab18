//! The fixed qubit gateset and its pure interpretation.

use std::collections::BTreeMap;
use strand_core::{AffineExpr, Axis, BBox, BoxKind, Cplx, Error, Ob, Ty};
use strand_tensor::Tensor;

pub fn bit() -> Ty {
    Ty::one(Ob::Digit(2))
}

pub fn qubit() -> Ty {
    Ty::one(Ob::Qudit(2))
}

fn unary(name: &str, entries: [[Cplx; 2]; 2]) -> BBox {
    let array = entries.into_iter().flatten().collect();
    BBox::gate(name, qubit(), qubit(), array).expect("2x2 array")
}

pub fn x() -> BBox {
    let (o, l) = (Cplx::zero(), Cplx::one());
    unary("X", [[o, l], [l, o]])
}

pub fn y() -> BBox {
    let o = Cplx::zero();
    unary("Y", [[o, Cplx::new(0.0, -1.0)], [Cplx::new(0.0, 1.0), o]])
}

pub fn z() -> BBox {
    let o = Cplx::zero();
    unary("Z", [[Cplx::one(), o], [o, Cplx::real(-1.0)]])
}

pub fn h() -> BBox {
    let r = Cplx::real(1.0 / 2.0_f64.sqrt());
    unary("H", [[r, r], [r, -r]])
}

pub fn cx() -> BBox {
    let mut array = vec![Cplx::zero(); 16];
    for (i, j) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
        array[i * 4 + j] = Cplx::one();
    }
    BBox::gate("CX", qubit().pow(2), qubit().pow(2), array).expect("4x4 array")
}

pub fn rz(phase: AffineExpr) -> BBox {
    BBox::rot(Axis::Z, phase)
}

pub fn rx(phase: AffineExpr) -> BBox {
    BBox::rot(Axis::X, phase)
}

pub fn ket(digits: &[usize]) -> BBox {
    BBox::ket(digits.to_vec(), 2).expect("bits below base")
}

pub fn bra(digits: &[usize]) -> BBox {
    BBox::bra(digits.to_vec(), 2).expect("bits below base")
}

pub fn sqrt2() -> BBox {
    BBox::sqrt(2.0_f64.sqrt())
}

/// diag(e^{-iπφ}, e^{iπφ}); a full turn is φ = 1.
fn rz_array(phi: f64) -> Tensor<Cplx> {
    let half_theta = std::f64::consts::PI * phi;
    let data = vec![
        Cplx::new(half_theta.cos(), -half_theta.sin()),
        Cplx::zero(),
        Cplx::zero(),
        Cplx::new(half_theta.cos(), half_theta.sin()),
    ];
    Tensor { dom: vec![2], cod: vec![2], data }
}

fn dims_of(ty: &Ty) -> Result<Vec<usize>, Error> {
    ty.iter()
        .map(|ob| match ob {
            Ob::Qudit(n) | Ob::Digit(n) => Ok(*n),
            other => Err(Error::UnknownBox(other.to_string())),
        })
        .collect()
}

/// Pure semantics of one undaggered box; rotations read their angle from
/// the assignment.
pub fn gate_image(b: &BBox, assignment: &BTreeMap<String, f64>) -> Result<Tensor<Cplx>, Error> {
    match &b.kind {
        BoxKind::Gate { array, .. } => {
            Tensor::new(array.clone(), dims_of(&b.dom)?, dims_of(&b.cod)?)
        }
        BoxKind::Rot { axis: Axis::Z, phase, .. } => Ok(rz_array(phase.eval(assignment)?)),
        BoxKind::Rot { axis: Axis::X, phase, .. } => {
            let had = gate_image(&h(), assignment)?;
            had.then(&rz_array(phase.eval(assignment)?))?.then(&had)
        }
        BoxKind::KetBra { digits, base, bra: false } => {
            let mut acc = Tensor::id(&[]);
            for &d in digits {
                let mut row = vec![Cplx::zero(); *base];
                row[d] = Cplx::one();
                acc = acc.tensor(&Tensor { dom: vec![], cod: vec![*base], data: row });
            }
            Ok(acc)
        }
        BoxKind::Sqrt { value } => Ok(Tensor::scalar(Cplx::real(value.get()))),
        BoxKind::Scalar { value, pure: true } => Ok(Tensor::scalar(*value)),
        _ => Err(Error::UnknownBox(b.label())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(b: &BBox) -> Tensor<Cplx> {
        gate_image(b, &BTreeMap::new()).unwrap()
    }

    #[test]
    fn hadamard_squares_to_the_identity() {
        let hh = image(&h()).then(&image(&h())).unwrap();
        assert!(hh.allclose(&Tensor::id(&[2]), 1e-12));
    }

    #[test]
    fn zero_rotation_is_the_identity() {
        let r = gate_image(&rz(AffineExpr::constant(0.0)), &BTreeMap::new()).unwrap();
        assert!(r.allclose(&Tensor::id(&[2]), 1e-12));
    }

    #[test]
    fn controlled_not_permutes_the_upper_block() {
        let mut expect = vec![Cplx::zero(); 16];
        for (i, j) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            expect[i * 4 + j] = Cplx::one();
        }
        assert_eq!(image(&cx()).data, expect);
    }

    #[test]
    fn x_rotation_conjugates_by_hadamard() {
        let phi = AffineExpr::var("t");
        let mut env = BTreeMap::new();
        env.insert("t".to_string(), 0.3);
        let lhs = gate_image(&rx(phi.clone()), &env).unwrap();
        let rhs = image(&h())
            .then(&gate_image(&rz(phi), &env).unwrap())
            .unwrap()
            .then(&image(&h()))
            .unwrap();
        assert!(lhs.allclose(&rhs, 1e-12));
        // A half turn is X up to global phase -i.
        env.insert("t".to_string(), 0.5);
        let half = gate_image(&rx(AffineExpr::var("t")), &env).unwrap();
        let phased = image(&x()).map(|v| *v * Cplx::new(0.0, -1.0));
        assert!(half.allclose(&phased, 1e-12));
    }

    #[test]
    fn kets_stack_by_tensor() {
        let v = gate_image(&ket(&[0, 1]), &BTreeMap::new()).unwrap();
        assert_eq!(v.dom, Vec::<usize>::new());
        assert_eq!(v.cod, vec![2, 2]);
        let mut expect = vec![Cplx::zero(); 4];
        expect[1] = Cplx::one();
        assert_eq!(v.data, expect);
    }

    #[test]
    fn unbound_angles_are_reported() {
        let err = gate_image(&rz(AffineExpr::var("missing")), &BTreeMap::new());
        assert!(matches!(err, Err(Error::MissingVar(v)) if v == "missing"));
    }
}
