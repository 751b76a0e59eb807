//! K(Q): a KTS(2v + 1) from a quadruple system of order v, with the
//! colourings it inherits.

use kirkman::catalog::q13;
use kirkman::constructions::{kq_build, kq_colour_2delta, kq_colour_delta_plus_one};
use kirkman::design::{is_weak, Colouring, Point};
use kirkman::solver::{chromatic_number, search_weak_colouring, Chromatic, ResolveOptions, SearchOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = q13();
    let k = kq_build(13, &q.written, &ResolveOptions::default())?;
    println!("K(Q(13)): v={} blocks={} classes={}", k.v(), k.design.num_blocks(), k.resolution.len());

    // A 3-colouring listed with the example: primes are 13 + i, infinity 26.
    let p = |i: Point| 13 + i;
    let classes: [Vec<Point>; 3] = [
        vec![0, 1, 2, 3, 4, 5, 6, p(0), p(2)],
        vec![7, 8, 10, 12, p(6), p(8), p(9), p(11), p(12)],
        vec![9, 11, p(1), p(3), p(4), p(5), p(7), p(10), 26],
    ];
    let refs: Vec<&[Point]> = classes.iter().map(Vec::as_slice).collect();
    let three = Colouring::from_classes(27, &refs)?;
    println!("listed 3-colouring weak: {}", is_weak(&k.design, &three)?.ok());
    if let Chromatic::Exact { delta, .. } = chromatic_number(&k.design, 4, None, 1)?.result {
        println!("chromatic number {delta}");
    }

    let c4 = kq_colour_2delta(&q.design, &q.colouring)?;
    println!("2-colouring of Q(13) -> weak {}-colouring, type {}", c4.colouring.delta(), c4.colouring.colour_type());

    // A 3-colouring of Q(13) giving every block three colours, if one exists.
    let opts = SearchOptions::new(3).min_colours(3);
    match search_weak_colouring(&q.design, &opts)?.colouring() {
        Some(c) => {
            let out = kq_colour_delta_plus_one(&q.design, c)?;
            println!("3-colouring with 3 colours per block -> weak {}-colouring", out.colouring.delta());
        }
        None => println!("Q(13) has no 3-colouring with three colours on every block"),
    }
    Ok(())
}
