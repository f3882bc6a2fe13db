use bca_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    bca_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(bca_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn structure_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        let spec = c("atoms: a b c\ncontact: adjacency\nedges: a-b b-c\n");
        assert_eq!(bca_structure_parse(spec.as_ptr(), &mut s), BcaStatus::Ok);
        assert_eq!(bca_structure_atom_count(s), 3);
        let (mut a, mut cc) = (0u32, 0u32);
        assert_eq!(bca_structure_element(s, c("a").as_ptr(), &mut a), BcaStatus::Ok);
        assert_eq!(bca_structure_element(s, c("c").as_ptr(), &mut cc), BcaStatus::Ok);
        let mut out = true;
        assert_eq!(bca_contact(s, a, cc, &mut out), BcaStatus::Ok);
        assert!(!out);
        let mut ab = 0;
        bca_structure_element(s, c("a, b").as_ptr(), &mut ab);
        assert_eq!(bca_contact(s, ab, cc, &mut out), BcaStatus::Ok);
        assert!(out);
        assert_eq!(bca_well_inside(s, a, ab, &mut out), BcaStatus::Ok);
        assert!(out);
        assert_eq!(bca_well_inside(s, a, a, &mut out), BcaStatus::Ok);
        assert!(!out);
        assert_eq!(bca_contact(s, 1 << 5, a, &mut out), BcaStatus::InvalidArgument);
        let mut json = ptr::null_mut();
        assert_eq!(bca_check_json(s, &mut json), BcaStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        let g1 = v.as_array().unwrap().iter().find(|i| i["axiom"] == "G1").unwrap();
        assert_eq!(g1["witness"][0], "{b}");
        bca_structure_free(s);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut s = ptr::null_mut();
        let bad = c("atoms: a\ncontact: nearby\n");
        assert_eq!(bca_structure_parse(bad.as_ptr(), &mut s), BcaStatus::ParseError);
        assert!(s.is_null());
        assert!(last_error().starts_with("2:10:"), "{}", last_error());
        assert_eq!(bca_structure_parse(ptr::null(), &mut s), BcaStatus::NullPointer);
        let mut n = 0;
        assert_eq!(bca_structure_element(ptr::null(), c("a").as_ptr(), &mut n), BcaStatus::NullPointer);
        let invalid = [0xffu8, 0];
        assert_eq!(bca_structure_parse(invalid.as_ptr().cast(), &mut s), BcaStatus::InvalidUtf8);
        bca_structure_free(ptr::null_mut());
        bca_region_free(ptr::null_mut());
        bca_string_free(ptr::null_mut());
        assert_eq!(bca_structure_atom_count(ptr::null()), 0);
    }
}

#[test]
fn regions() {
    unsafe {
        let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(bca_region_parse(c("(0,1) | (1,2)").as_ptr(), &mut a), BcaStatus::Ok);
        assert_eq!(bca_region_parse(c("(2,3)").as_ptr(), &mut b), BcaStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(bca_region_to_string(a, &mut text), BcaStatus::Ok);
        assert_eq!(take(text), "(0,2)");
        let mut out = false;
        assert_eq!(bca_region_contact(a, b, &mut out), BcaStatus::Ok);
        assert!(out);
        assert_eq!(bca_region_well_inside(a, b, &mut out), BcaStatus::Ok);
        assert!(!out);
        bca_region_free(a);
        bca_region_free(b);
        assert_eq!(bca_region_parse(c("(1,0)").as_ptr(), &mut a), BcaStatus::ParseError);
        let mut r = ptr::null_mut();
        assert_eq!(bca_region_eval(c("(1/3,2/3) << (0,1)").as_ptr(), &mut r), BcaStatus::Ok);
        assert_eq!(take(r), "true");
        assert_eq!(bca_region_eval(c("~(0,1)").as_ptr(), &mut r), BcaStatus::Ok);
        assert_eq!(take(r), "(-inf,0) | (1,inf)");
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/bca.h")).unwrap();
    for name in [
        "bca_abi_version",
        "bca_last_error",
        "bca_structure_parse",
        "bca_structure_free",
        "bca_structure_atom_count",
        "bca_structure_element",
        "bca_contact",
        "bca_well_inside",
        "bca_check_json",
        "bca_region_parse",
        "bca_region_free",
        "bca_region_to_string",
        "bca_region_contact",
        "bca_region_well_inside",
        "bca_region_eval",
        "bca_string_free",
        "typedef struct BcaStructure BcaStructure",
        "typedef struct BcaRegion BcaRegion",
        "BCA_STATUS_PARSE_ERROR = 3",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    assert_eq!(bca_abi_version(), BCA_ABI_VERSION);
}
