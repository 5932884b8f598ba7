//! Regular Hom-alternative bimodules: checks, untwisting and irreducibility.

use homalt::bimodule::{
    bimodule_irreducibility, check_alternative_bimodule, is_hom_bimodule, ker_im_subbimodules, twist_bimodule,
    untwist_bimodule, HomBimodule,
};
use homalt::cli::fixtures;
use homalt::constructions::untwist;
use homalt::structure::DEFAULT_BUDGET;

fn main() {
    let alg = fixtures::oct_alpha();
    let reg = HomBimodule::regular(&alg);
    println!("regular oct_alpha flags {:?}", is_hom_bimodule(&reg).flags());

    let plain = untwist_bimodule(&reg, &untwist(&alg).unwrap().induced).unwrap();
    println!("untwisted alternative flags {:?}", check_alternative_bimodule(&plain).flags());
    let back = twist_bimodule(&plain, alg.twist(), reg.twist()).unwrap();
    println!("round trip exact: {}", back == reg);

    for name in ["oct_alpha", "a3p_3", "split2"] {
        let bim = HomBimodule::regular(&fixtures::algebra(name).unwrap());
        let d = bimodule_irreducibility(&bim, 0, DEFAULT_BUDGET);
        let dims: Vec<_> = d.components.iter().map(|c| c.dim()).collect();
        println!("regular {name}: {} ({}) components {dims:?}", d.verdict.status, d.verdict.reason.as_str());
    }

    let ki = ker_im_subbimodules(&HomBimodule::regular(&fixtures::split2()));
    println!("split2: Ker(alpha_V) dim {} subbimodule {}", ki.kernel.dim(), ki.kernel_is_subbimodule);
}
