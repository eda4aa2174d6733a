//! Hermite polynomials, Wronskians of diagrams and their pseudo-Wronskian form.

use maya_ladder::{
    conjugate_hermite, hermite, normalized_h, pseudo_wronskian, wronskian_polynomial, MayaDiagram,
};

fn main() -> maya_ladder::Result<()> {
    for n in 0..5 {
        println!(
            "H_{n} = {:<24} conj H_{n} = {}",
            hermite(n).to_string(),
            conjugate_hermite(n)
        );
    }
    println!();
    for text in ["K:{1,2}", "K:{-2}", "K:{-3,-1}", "K:{-2,1,3}"] {
        let m: MayaDiagram = text.parse()?;
        let h = wronskian_polynomial(&m);
        println!("{text:<11} H = {h}");
        println!(
            "{:<11} pseudo-Wronskian agrees: {}",
            "",
            h == pseudo_wronskian(&m)
        );
        let hat = normalized_h(&m);
        let same = (-3..=3).all(|n| normalized_h(&m.translate(n)) == hat);
        println!(
            "{:<11} normalized {hat}, unchanged under translation: {same}",
            ""
        );
    }
    Ok(())
}
