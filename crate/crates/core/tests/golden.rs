use std::process::Command;

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_hstrata")).args(args).output().unwrap();
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn grass_6_3_table() {
    assert_eq!(run(&["enumerate", "--j", "6", "--d", "3"]), include_str!("golden/table1.csv"));
}

#[test]
fn grass_8_3_table_with_closure_marks() {
    assert_eq!(
        run(&["enumerate", "--j", "8", "--d", "3", "--star", "5,1"]),
        include_str!("golden/table2.csv")
    );
}

#[test]
fn grass_9_4_scroll_table() {
    assert_eq!(
        run(&["enumerate", "--j", "9", "--d", "4", "--nose"]),
        include_str!("golden/table3.csv")
    );
}
