//! Small hand-worked examples, reproduced exactly.

use path_combinatorics::*;

fn path(a: &[usize], l: &[usize]) -> LabeledPath {
    LabeledPath::new(DyckPath::new(a.to_vec()).unwrap(), l.to_vec()).unwrap()
}

#[test]
fn sample_labeled_path() {
    let p = path(&[0, 1, 1, 0, 0], &[3, 6, 2, 1, 2]);
    let s = p.stats();
    assert_eq!(s.area, 2);
    assert_eq!(s.dinv, 4);
    assert_eq!(s.d, vec![0, 2, 1, 1, 0]);
    assert_eq!(s.val, vec![4, 5]);
    assert_eq!(p.content().parts(), &[1, 2, 1, 1]);
}

fn stack_example() -> StackPath {
    StackPath::parse("a=[0,1,1,0,0,1];l=[3,4,6,1,4,5];dec=[3,4,5]").unwrap()
}

#[test]
fn stack_path_statistics() {
    let p = stack_example();
    assert_eq!(p.shape().diag_rows(), vec![1, 2, 6]);
    assert_eq!(p.shape().x_positions(), &[0, 0, 0, 1, 1, 1]);
    assert_eq!(p.area(), 3);
    assert_eq!(p.wdinv(), 1);
    assert_eq!(p.hdinv(), 0);
    assert_eq!(p.h(), vec![0, 1, 2, 2, 3, 4]);
    assert_eq!(p.reading_word(), vec![5, 4, 1, 6, 4, 3]);
    assert_eq!(p.to_string(), "a=[0,1,1,0,0,1];l=[3,4,6,1,4,5];dec=[3,4,5]");
}

#[test]
fn phi_of_fall_decorated_example() {
    let fall =
        DecoratedPath::new(path(&[0, 1, 2, 2, 3, 4], &[3, 4, 6, 1, 4, 5]), Decoration::Fall, vec![2, 3, 4]).unwrap();
    assert_eq!(fall.path().path().x_positions(), vec![0, 0, 0, 1, 1, 1]);
    let s = phi(&fall).unwrap();
    assert_eq!(s, stack_example());
    assert_eq!(s.area(), fall.area_minus());
    assert_eq!(s.hdinv(), fall.path().dinv());
    assert_eq!(phi_inverse(&s).unwrap(), fall);
}

#[test]
fn psi_of_valley_decorated_example() {
    let val =
        DecoratedPath::new(path(&[0, 1, 1, 0, 0, 1], &[3, 4, 6, 1, 4, 5]), Decoration::Val, vec![3, 4, 5]).unwrap();
    assert_eq!(val.path().path().x_positions(), vec![0, 0, 1, 3, 4, 4]);
    let s = psi(&val).unwrap();
    assert_eq!(s, stack_example());
    assert_eq!(s.area(), val.path().area());
    assert_eq!(s.wdinv(), val.dinv_minus());
    assert_eq!(psi_inverse(&s).unwrap(), val);
}

#[test]
fn theta_of_stack_example() {
    let d = theta(&stack_example()).unwrap();
    assert_eq!(d.path().word(), "NNENEE");
    let got: Vec<(usize, usize, bool, Vec<usize>)> =
        d.squares().iter().map(|s| (s.x, s.y, s.north, s.labels.clone())).collect();
    assert_eq!(
        got,
        vec![
            (0, 1, true, vec![3]),
            (0, 2, true, vec![4, 6]),
            (1, 2, false, vec![1, 4]),
            (1, 3, true, vec![5]),
            (2, 3, false, vec![]),
        ]
    );
    assert_eq!(d.area(), 3);
    assert_eq!(d.wdinv(), 1);
    assert_eq!(theta_inverse(&d).unwrap(), stack_example());
}

fn two_column_example() -> StackPath {
    let shape = StackShape::new(&[1, 4], vec![0, 0, 0, 0, 0, 1, 1, 1]).unwrap();
    StackPath::new(shape, vec![1, 2, 3, 4, 5, 1, 2, 6]).unwrap()
}

#[test]
fn xy_diagram_of_two_column_example() {
    let p = two_column_example();
    assert_eq!(p.area(), 2);
    assert_eq!(p.reading_word(), vec![6, 5, 2, 4, 1, 3, 2, 1]);
    assert!(is_yamanouchi(&p.reading_word()));
    let d = xy_diagram(&p).unwrap();
    assert_eq!(d.to_string(), "XX/XY/XY/X./X.");
    assert_eq!(d.area(), 2);
    assert_eq!(d.hdinv(), p.hdinv());
    assert_eq!(d.to_path().unwrap(), p);
    assert_eq!(d.classify().unwrap(), XYClass::TypeI { a: 2, b: 2, c: 1, d: 0, side: None });
}

#[test]
fn diagram_types() {
    let one: XYDiagram = "X./X./XX/XY/XY/X.".parse().unwrap();
    assert_eq!(one.classify().unwrap(), XYClass::TypeI { a: 1, b: 2, c: 1, d: 2, side: Some(Side::Left) });
    let two: XYDiagram = ".X/.X/.Y/XY/X./X.".parse().unwrap();
    assert_eq!(two.classify().unwrap(), XYClass::TypeII { a: 2, b: 1, c: 1, d: 2 });
    for d in [one, two] {
        let p = d.to_path().unwrap();
        assert!(is_yamanouchi(&p.reading_word()));
        assert_eq!(xy_diagram(&p).unwrap(), d);
        assert_eq!(p.area(), d.area());
        assert_eq!(p.hdinv(), d.hdinv());
    }
}

#[test]
fn malformed_diagrams_are_rejected() {
    assert!("XY/X.".parse::<XYDiagram>().is_ok());
    assert!("YX/X.".parse::<XYDiagram>().is_err());
    assert!(".Y/X.".parse::<XYDiagram>().is_err());
    assert!("XX/XY/XY".parse::<XYDiagram>().is_ok());
    assert!("XY/YX/X.".parse::<XYDiagram>().is_err());
    assert!("X./.X".parse::<XYDiagram>().is_err());
}

#[test]
fn starred_catalan_path() {
    let d = DyckPath::from_word("NNENEENENE").unwrap();
    assert_eq!(d.area_vector(), &[0, 1, 1, 0, 0]);
    assert_eq!(star_composition(&d, &[2]).unwrap().parts(), &[2, 1, 1]);
}

#[test]
fn partially_labeled_example() {
    let p = PartialPath::parse("a=[0,1,1,0,0,1,2,1];l=[2,4,0,3,0,1,5,6]").unwrap();
    assert_eq!((p.labeled_rows(), p.empty_rows()), (6, 2));
    assert_eq!(p.area(), 6);
    assert_eq!(p.touch(), 2);
    // The six pairs listed with the drawing all count, and so does (3, 8): the
    // empty row 3 has label 0 < 6 at equal area. The total is therefore 7.
    assert_eq!(p.dinv(), 7);
    assert_eq!(p.dinv_prime(), 6);
}
