use redlink::diagram::parse_diagram;
use redlink_oracle::determinant_by_state_sum;

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const HOPF: &str = "X(2,4,1,3) X(3,1,4,2)";
const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
const BORROMEAN: &str = "X(4,9,1,12) X(8,1,5,2) X(9,6,10,5) X(6,4,7,3) X(11,7,12,8) X(2,10,3,11)";

#[test]
fn state_sum_known_values() {
    assert_eq!(determinant_by_state_sum(&parse_diagram("O").unwrap()), 1);
    assert_eq!(
        determinant_by_state_sum(&parse_diagram("X(1,1,2,2)").unwrap()),
        1
    );
    assert_eq!(determinant_by_state_sum(&parse_diagram(HOPF).unwrap()), 2);
    assert_eq!(
        determinant_by_state_sum(&parse_diagram(TREFOIL).unwrap()),
        3
    );
    assert_eq!(
        determinant_by_state_sum(&parse_diagram(FIGURE_EIGHT).unwrap()),
        5
    );
    println!(
        "borromean det = {}",
        determinant_by_state_sum(&parse_diagram(BORROMEAN).unwrap())
    );
}

#[test]
fn split_diagrams_vanish() {
    let split = format!("{TREFOIL} O");
    assert_eq!(determinant_by_state_sum(&parse_diagram(&split).unwrap()), 0);
    assert_eq!(determinant_by_state_sum(&parse_diagram("O O").unwrap()), 0);
}
