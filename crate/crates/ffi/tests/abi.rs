use connectivity_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    cx_string_free(s);
    out
}

fn last_error() -> String {
    let p = cx_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

const B3: &str = r#"{"points": 3, "connected": [[0], [1], [2], [0, 1, 2]]}"#;
const Z6: &str = r#"{"points": 6, "internal": [[0, 1], [2, 3], [4, 5]], "external": [[0, 2], [3, 5]]}"#;
const BETA: &str = r#"{"category": {"objects": ["S", "T"],
  "arrows": [{"id": "id_S", "dom": "S", "cod": "S"}, {"id": "id_T", "dom": "T", "cod": "T"}, {"id": "f", "dom": "S", "cod": "T"}],
  "identities": {"S": "id_S", "T": "id_T"}},
  "states": {"S": ["p"], "T": ["q"]}, "transitions": {"f": {"p": ["q"]}}}"#;

#[test]
fn space_round_trip_and_order() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(cx_space_from_json(c(B3).as_ptr(), &mut s), CxStatus::Ok);
        let mut n = 0;
        assert_eq!(cx_space_points(s, &mut n), CxStatus::Ok);
        assert_eq!(n, 3);
        assert_eq!(cx_space_is_connected(s, 0b111), CxStatus::Ok);
        assert_eq!(cx_space_is_connected(s, 0b011), CxStatus::False);
        let mut order = 99;
        assert_eq!(cx_space_order(s, &mut order), CxStatus::Ok);
        assert_eq!(order, 1);

        let mut j = ptr::null_mut();
        assert_eq!(cx_space_to_json(s, &mut j), CxStatus::Ok);
        let text = take(j);
        let mut back = ptr::null_mut();
        assert_eq!(cx_space_from_json(c(&text).as_ptr(), &mut back), CxStatus::Ok);
        let mut j2 = ptr::null_mut();
        assert_eq!(cx_space_to_json(back, &mut j2), CxStatus::Ok);
        assert_eq!(take(j2), text);

        let mut j = ptr::null_mut();
        assert_eq!(cx_space_order_json(s, &mut j), CxStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(j)).unwrap();
        assert_eq!(v["order_def13"], 2);

        let mut q = ptr::null_mut();
        assert_eq!(cx_space_quotient(s, c("[[0,1],[2]]").as_ptr(), &mut q), CxStatus::Ok);
        assert_eq!(cx_space_is_connected(q, 0b11), CxStatus::Ok);
        cx_space_free(q);
        cx_space_free(back);
        cx_space_free(s);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(cx_space_from_json(c("{not json").as_ptr(), &mut s), CxStatus::Input);
        assert!(s.is_null());
        assert!(!last_error().is_empty());

        let bad = r#"{"points": 3, "connected": [[0, 1], [1, 2]]}"#;
        assert_eq!(cx_space_from_json(c(bad).as_ptr(), &mut s), CxStatus::Invalid);

        assert_eq!(cx_space_from_json(c(r#"{"points": 64, "connected": []}"#).as_ptr(), &mut s), CxStatus::Capacity);

        assert_eq!(cx_space_from_json(ptr::null(), &mut s), CxStatus::Null);
        assert!(last_error().contains("null"));
        assert_eq!(cx_space_is_connected(ptr::null(), 1), CxStatus::Null);

        // a successful call clears the message
        assert_eq!(cx_space_from_json(c(B3).as_ptr(), &mut s), CxStatus::Ok);
        assert!(cx_last_error().is_null());
        assert_eq!(cx_space_quotient(s, c("[[0,1]]").as_ptr(), &mut ptr::null_mut()), CxStatus::Input);
        cx_space_free(s);

        cx_space_free(ptr::null_mut());
        cx_string_free(ptr::null_mut());
    }
}

#[test]
fn foliation_leaves_and_leaf_spaces() {
    unsafe {
        let mut z = ptr::null_mut();
        assert_eq!(cx_foliation_from_json(c(Z6).as_ptr(), &mut z), CxStatus::Ok);
        assert_eq!(cx_foliation_is_regular(z), CxStatus::False);
        let mut k = 0;
        assert_eq!(cx_foliation_leaf_count(z, &mut k), CxStatus::Ok);
        assert_eq!(k, 3);
        let mut j = ptr::null_mut();
        assert_eq!(cx_foliation_leaves_json(z, &mut j), CxStatus::Ok);
        assert_eq!(take(j), "[[0,1],[2,3],[4,5]]");

        let mut induced = ptr::null_mut();
        assert_eq!(cx_foliation_leaf_space(z, false, &mut induced), CxStatus::Ok);
        assert_eq!(cx_space_is_connected(induced, 0b011), CxStatus::False);
        let mut quotient = ptr::null_mut();
        assert_eq!(cx_foliation_leaf_space(z, true, &mut quotient), CxStatus::Ok);
        assert_eq!(cx_space_is_connected(quotient, 0b011), CxStatus::Ok);
        assert_eq!(cx_space_is_connected(quotient, 0b101), CxStatus::False);
        cx_space_free(induced);
        cx_space_free(quotient);
        cx_foliation_free(z);
    }
}

#[test]
fn dynamics_orbits() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(cx_dynamics_from_json(c(BETA).as_ptr(), &mut d), CxStatus::Ok);
        assert_eq!(cx_dynamics_is_proper(d), CxStatus::Ok);
        assert_eq!(cx_dynamics_is_deterministic(d), CxStatus::Ok);
        let mut j = ptr::null_mut();
        assert_eq!(cx_dynamics_orbit_json(d, c("p").as_ptr(), &mut j), CxStatus::Ok);
        assert_eq!(take(j), r#"["p","q"]"#);
        assert_eq!(cx_dynamics_orbit_json(d, c("r").as_ptr(), &mut j), CxStatus::Input);
        cx_dynamics_free(d);
    }
}

#[test]
fn rotation_has_one_leaf() {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "tests", "data", "rotation6.json"].iter().collect();
    let text = std::fs::read_to_string(path).unwrap();
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(cx_conn_dynamics_from_json(c(&text).as_ptr(), &mut d), CxStatus::Ok);
        let mut z = ptr::null_mut();
        assert_eq!(cx_conn_dynamics_foliation(d, &mut z), CxStatus::Ok);
        let mut k = 0;
        assert_eq!(cx_foliation_leaf_count(z, &mut k), CxStatus::Ok);
        assert_eq!(k, 1);
        let mut order = 99;
        assert_eq!(cx_conn_dynamics_order(d, &mut order), CxStatus::Ok);
        assert_eq!(order, 0);
        cx_foliation_free(z);
        cx_conn_dynamics_free(d);
    }
}

#[test]
fn header_declares_every_export_and_compiles() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/connectivity.h")).unwrap();
    let src = std::fs::read_to_string(format!("{dir}/src/lib.rs")).unwrap();
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn ")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for t in ["typedef struct CxSpace CxSpace;", "typedef struct CxFoliation CxFoliation;", "CX_STATUS_NULL = 6"] {
        assert!(header.contains(t), "{t}");
    }
    // syntax check with the system C compiler when there is one
    let probe = std::env::temp_dir().join(format!("cx_probe_{}.c", std::process::id()));
    std::fs::write(&probe, "#include \"connectivity.h\"\nint main(void) { CxSpace *s = 0; return cx_space_is_connected(s, 1) == CX_STATUS_NULL ? 0 : 1; }\n").unwrap();
    match Command::new("cc").args(["-fsyntax-only", "-Wall", "-Werror", "-I", &format!("{dir}/include")]).arg(&probe).output() {
        Ok(o) => assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr)),
        Err(_) => eprintln!("no C compiler, header syntax not checked"),
    }
    let _ = std::fs::remove_file(probe);
}
