//! Checks the stored colour certificates: the 4-colourings of the thirty
//! KTS(33) and the rainbow colourings of the small systems.

use kirkman::catalog::{kts15, kts9, lookup, sigma_kts};
use kirkman::design::is_weak;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for i in 1..=30 {
        let e = lookup(&format!("tv33-{i}"))?;
        let c = e.colouring("paper").expect("every TV system has a certificate");
        let weak = is_weak(&e.design, c)?.ok();
        println!("tv33-{i:<2} weak={weak} type={}", c.colour_type());
    }
    let rot = lookup("rot33-59a")?;
    let c = rot.colouring("paper").expect("certificate");
    println!("rot33-59a weak={} type={}", is_weak(&rot.design, c)?.ok(), c.colour_type());

    let mut rainbow = vec![("kts9", kts9().coloured_with("3x3").expect("3x3")), ("kts15", kts15().coloured())];
    for v in [21, 33, 39, 57, 69] {
        rainbow.push(("sigma", sigma_kts(v)?.coloured()));
    }
    for (name, kts) in rainbow {
        let r = kts.rainbow()?;
        println!("{name}({}) rainbow classes {:?}", kts.kts.v(), r.rainbow_classes);
    }
    Ok(())
}
