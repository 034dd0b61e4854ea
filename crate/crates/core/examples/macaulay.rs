use facenum::face_ring::{binomial_representation, is_f_vector, is_m_sequence, macaulay_next};

fn main() -> facenum::Result<()> {
    let m = 11;
    println!("{m} = {:?} as a 3-binomial representation", binomial_representation(m, 3));
    println!("largest successor in an M-sequence: {}", macaulay_next(m, 3));

    for v in [[1, 3, 6, 10], [1, 3, 6, 11], [1, 4, 6, 4], [1, 2, 4, 0]] {
        println!("{v:?}: M-sequence {}, f-vector {}", is_m_sequence(&v)?, is_f_vector(&v)?);
    }
    Ok(())
}
