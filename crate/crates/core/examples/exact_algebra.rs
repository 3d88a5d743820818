//! Exact rational linear algebra: rank, kernels, Laurent coefficients,
//! algebra closure and joint eigenbases.

use yangtensor::exactalg::{
    algebra_closure_dim, laurent_leading, simultaneous_eigenbasis, Poly, PolyMatrix, Rat, RatFnMatrix, RatMatrix,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = RatMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
    println!("rank {} with kernel {:?}", m.rank(), m.kernel());

    // (1/z) * Id has a simple pole at 0.
    let f = RatFnMatrix::new(PolyMatrix::identity(2), Poly::linear(Rat::zero()))?;
    let (order, coeff) = laurent_leading(&f, &Rat::zero())?;
    println!("Laurent order {order}, leading coefficient {coeff:?}");

    let e12 = RatMatrix::from_i64(&[vec![0, 1], vec![0, 0]]);
    let e21 = e12.transpose();
    println!("algebra generated by E12, E21 has dimension {}", algebra_closure_dim(&[e12, e21], 4));

    let d = RatMatrix::from_i64(&[vec![1, 0], vec![0, 2]]);
    for line in simultaneous_eigenbasis(2, &[d])? {
        println!("eigenvector {:?} with eigenvalues {:?}", line.vector, line.eigenvalues);
    }
    Ok(())
}
