//! Projective modules as images of idempotent matrices, compared by rank
//! vector and cross-checked against explicit Hom spaces.

use fdalg::algebra::{direct_product, matrix_algebra, rationals};
use fdalg::corpus::{compare_modules, hom_dim_oracle, ExplicitModule};
use fdalg::lifting::{modules_isomorphic, rank_realizable, IdempotentMatrix, ProjectiveModuleDescriptor};
use fdalg::rat::{format_rat, ratio};
use fdalg::structure::wedderburn_decomposition;

fn main() -> fdalg::Result<()> {
    let m = matrix_algebra(2);
    let w = wedderburn_decomposition(&m)?;
    let e11 = ProjectiveModuleDescriptor::new(&m, IdempotentMatrix::from_element(&m, &m.basis_element(0))?, &w)?;
    let e22 = ProjectiveModuleDescriptor::new(&m, IdempotentMatrix::from_element(&m, &m.basis_element(3))?, &w)?;
    let ranks: Vec<String> = e11.rank_vector.iter().map(format_rat).collect();
    println!("Mat_2(Q): E11 has rank vector {ranks:?}");
    println!("E11 A ≅ E22 A: {}", modules_isomorphic(&e11, &e22)?);
    println!("dim Hom(E11 A, E22 A) = {}", hom_dim_oracle(&e11, &e22)?);
    println!("rank 1/2 realizable: {}", rank_realizable(&w, &ratio(1, 2))?);

    let qq = direct_product(&[rationals(), rationals()]);
    let w = wedderburn_decomposition(&qq)?;
    let left = ProjectiveModuleDescriptor::new(&qq, IdempotentMatrix::from_element(&qq, &qq.basis_element(0))?, &w)?;
    let right = ProjectiveModuleDescriptor::new(&qq, IdempotentMatrix::from_element(&qq, &qq.basis_element(1))?, &w)?;
    let c = compare_modules(&ExplicitModule::new(&left), &ExplicitModule::new(&right))?;
    println!("Q x Q: (1,0)A vs (0,1)A isomorphic: {} (oracle {c:?})", modules_isomorphic(&left, &right)?);
    println!("uniform rank of (1,0)A: {:?}", left.uniform_rank.as_ref().map(format_rat));
    Ok(())
}
