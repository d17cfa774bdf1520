use hopfcheck::ff::{gf, Fe};
use hopfcheck::harness::catalog::{lie_i1, lie_i3};
use hopfcheck::harness::{Body, Instance};
use hopfcheck::hopf::HopfSC;
use hopfcheck::Error;
use proptest::prelude::*;

fn parse_err(text: &str) -> (usize, usize, String) {
    match Instance::parse(text) {
        Err(Error::Parse { line, col, msg }) => (line, col, msg),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn hand_written_primitive_line() {
    let text = "\
# k[z]/(z^2) over GF(2)
p=2 m=1 dim=2 kind=hopf label=trunc2
unit -> 1,0
mul 1 1 -> 1,0
mul 1 2 -> 0,1
mul 2 1 -> 0,1   # z z = 0 is omitted
delta 1 -> (1,1):1
delta 2 -> (1,2):1 (2,1):1
eps 1 -> 1
S 1 1 -> 1
S 2 2 -> 1
";
    let inst = Instance::parse(text).unwrap();
    assert_eq!(inst.label, "trunc2");
    let Body::Hopf(h) = &inst.body else { panic!() };
    assert_eq!(h, &HopfSC::truncated_primitive(&gf(2, 1).unwrap(), 2).unwrap());
    assert!(h.is_valid());
}

#[test]
fn lie_and_field_extension() {
    let inst = Instance::parse("p=3 m=1 dim=2 kind=rlie\nbracket 1 2 -> 0,1\nbracket 2 1 -> 0,2\npmap 1 -> 1,0\n").unwrap();
    assert_eq!(inst.body, Body::Rlie(lie_i3(3)));
    let inst = Instance::parse("p=2 m=2 dim=1 kind=subspace\nvec -> 3\n").unwrap();
    assert_eq!(inst.ctx.order(), 4);
    assert_eq!(inst.body, Body::Subspace(vec![vec![Fe(3)]]));
}

#[test]
fn error_positions() {
    assert_eq!(parse_err("").0, 1);
    let (l, c, m) = parse_err("p=2 dim=2 kind=lie");
    assert_eq!((l, c), (1, 16), "{m}");
    let (l, c, _) = parse_err("p=2 dim=2 kind=rlie colour=red");
    assert_eq!((l, c), (1, 21));
    let (l, c, _) = parse_err("p=4 dim=1 kind=rlie");
    assert_eq!((l, c), (1, 1));
    let (l, c, _) = parse_err("p=2 dim=2 kind=rlie\n\npmap 1 -> 1,2");
    assert_eq!((l, c), (3, 13));
    let (l, c, _) = parse_err("p=2 dim=2 kind=rlie\npmap 1 1,0");
    assert_eq!((l, c), (2, 1));
    let (l, c, _) = parse_err("p=2 dim=2 kind=rlie\nmul 1 1 -> 1,0");
    assert_eq!((l, c), (2, 1));
    let (l, c, _) = parse_err("p=2 dim=2 kind=hopf\ndelta 1 -> (1,1)1");
    assert_eq!((l, c), (2, 12));
    let (l, c, _) = parse_err("p=2 dim=2 kind=hopf\n-> 1,0");
    assert_eq!((l, c), (2, 1));
    let (l, _, m) = parse_err("p=2 dim=2 kind=group\ntable 1 1 -> 1");
    assert_eq!(l, 1);
    assert!(m.contains("missing"));
    let (_, _, m) = parse_err("p=2 dim=100000 kind=hopf");
    assert!(m.contains("limited"));
}

#[test]
fn serialization_omits_zeros() {
    let text = Instance::new("I1", &gf(2, 1).unwrap(), Body::Rlie(lie_i1())).serialize();
    assert_eq!(text, "p=2 m=1 dim=1 kind=rlie label=I1\npmap 1 -> 1\n");
}

proptest! {
    #[test]
    fn parser_never_panics(text in "[ -~\n]{0,200}") {
        let _ = Instance::parse(&text);
    }

    #[test]
    fn header_fuzz_round_trips(lines in prop::collection::vec("(mul|delta|eps|S|unit|vec|pmap) [0-9] [0-9]? ?-> [0-9,():]{0,12}", 0..6)) {
        let text = format!("p=2 m=1 dim=3 kind=hopf\n{}", lines.join("\n"));
        if let Ok(inst) = Instance::parse(&text) {
            prop_assert_eq!(Instance::parse(&inst.serialize()).unwrap(), inst);
        }
    }

    #[test]
    fn subspaces_round_trip(p in prop::sample::select(vec![2u64, 3]), raw in prop::collection::vec(prop::collection::vec(0u32..3, 4), 1..4)) {
        let ctx = gf(p, 1).unwrap();
        let vecs: Vec<Vec<Fe>> = raw.iter().map(|v| v.iter().map(|&x| Fe(x % p as u32)).collect()).collect();
        let inst = Instance::new("s", &ctx, Body::Subspace(vecs));
        prop_assert_eq!(Instance::parse(&inst.serialize()).unwrap(), inst);
    }
}
