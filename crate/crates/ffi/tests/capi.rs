//! Exercises the C ABI through the exported symbols.

use std::ffi::{CStr, CString};
use std::ptr;

use ptfree_ffi::*;

const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";

fn parse(text: &str) -> *mut PtInstance {
    let c = CString::new(text).unwrap();
    let mut inst: *mut PtInstance = ptr::null_mut();
    let status = unsafe { pt_instance_parse(c.as_ptr(), &mut inst) };
    assert_eq!(status, PtStatus::Ok);
    assert!(!inst.is_null());
    inst
}

#[test]
fn parse_and_inspect() {
    let inst = parse(C5);
    unsafe {
        assert_eq!(pt_instance_vertex_count(inst), 5);
        assert_eq!(pt_instance_edge_count(inst), 5);
        pt_instance_free(inst);
    }
}

#[test]
fn parse_error_sets_message() {
    let c = CString::new("p edge 2 1\ne 1 1\n").unwrap();
    let mut inst: *mut PtInstance = ptr::null_mut();
    let status = unsafe { pt_instance_parse(c.as_ptr(), &mut inst) };
    assert_eq!(status, PtStatus::ParseError);
    assert!(inst.is_null());
    let msg = unsafe { CStr::from_ptr(pt_last_error_message()) };
    assert!(msg.to_str().unwrap().contains("self-loop"));
}

#[test]
fn null_arguments_are_rejected() {
    let mut inst: *mut PtInstance = ptr::null_mut();
    assert_eq!(
        unsafe { pt_instance_parse(ptr::null(), &mut inst) },
        PtStatus::NullArgument
    );
    let mut out: *mut PtMwisResult = ptr::null_mut();
    assert_eq!(
        unsafe { pt_solve_mwis(ptr::null(), 5, false, &mut out) },
        PtStatus::NullArgument
    );
}

#[test]
fn check_ptfree_with_witness() {
    let inst = parse(C5);
    let mut free = false;
    let mut witness = [0u32; 8];
    let mut len = 0usize;
    unsafe {
        let status = pt_check_ptfree(inst, 5, &mut free, witness.as_mut_ptr(), 8, &mut len);
        assert_eq!(status, PtStatus::Ok);
        assert!(free);
        assert_eq!(len, 0);

        let status = pt_check_ptfree(inst, 4, &mut free, witness.as_mut_ptr(), 8, &mut len);
        assert_eq!(status, PtStatus::Ok);
        assert!(!free);
        assert_eq!(len, 4);
        // 1-based ids inside the graph.
        assert!(witness[..4].iter().all(|&v| (1..=5).contains(&v)));
        pt_instance_free(inst);
    }
}

#[test]
fn solve_mwis_on_c5() {
    let inst = parse(C5);
    let mut res: *mut PtMwisResult = ptr::null_mut();
    unsafe {
        assert_eq!(pt_solve_mwis(inst, 5, false, &mut res), PtStatus::Ok);
        assert_eq!(pt_mwis_weight(res), 2);
        assert_eq!(pt_mwis_vertex_count(res), 2);
        let mut buf = [0u32; 8];
        assert_eq!(pt_mwis_copy_vertices(res, buf.as_mut_ptr(), 8), 2);
        assert!(buf[0] >= 1 && buf[1] <= 5);
        assert!(pt_mwis_calls(res) >= 1);
        pt_mwis_free(res);
        pt_instance_free(inst);
    }
}

#[test]
fn solve_mwis_rejects_p5() {
    let inst = parse("p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
    let mut res: *mut PtMwisResult = ptr::null_mut();
    unsafe {
        assert_eq!(pt_solve_mwis(inst, 5, false, &mut res), PtStatus::NotPtFree);
        assert!(res.is_null());
        let msg = CStr::from_ptr(pt_last_error_message());
        assert!(msg.to_str().unwrap().contains("not P5-free"));
        pt_instance_free(inst);
    }
}

#[test]
fn coloring_round_trip() {
    let inst = parse(C5);
    let mut res: *mut PtColoringResult = ptr::null_mut();
    unsafe {
        assert_eq!(pt_solve_list3col(inst, 5, &mut res), PtStatus::Ok);
        assert!(pt_coloring_feasible(res));
        for v in 1..=5u32 {
            assert!((1..=3).contains(&pt_coloring_color(res, v)));
        }
        assert_eq!(pt_coloring_color(res, 0), 0);
        assert_eq!(pt_coloring_color(res, 99), 0);
        pt_coloring_free(res);
        pt_instance_free(inst);
    }
}

#[test]
fn coloring_infeasible_is_ok_status() {
    // Triangle with two-color lists.
    let inst = parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\nl 1 12\nl 2 12\nl 3 12\n");
    let mut res: *mut PtColoringResult = ptr::null_mut();
    unsafe {
        assert_eq!(pt_solve_list3col(inst, 5, &mut res), PtStatus::Ok);
        assert!(!pt_coloring_feasible(res));
        pt_coloring_free(res);
        pt_instance_free(inst);
    }
}

#[test]
fn cost_coloring_reports_cost() {
    let inst = parse("p edge 2 1\ne 1 2\nk 2 1 7\nk 2 2 1\nk 2 3 2\n");
    let mut res: *mut PtColoringResult = ptr::null_mut();
    unsafe {
        assert_eq!(pt_solve_cost3col(inst, 5, &mut res), PtStatus::Ok);
        assert!(pt_coloring_feasible(res));
        assert_eq!(pt_coloring_cost(res), 1);
        assert_eq!(pt_coloring_color(res, 2), 2);
        pt_coloring_free(res);
        pt_instance_free(inst);
    }
}

#[test]
fn oct_on_c5() {
    let inst = parse(C5);
    let mut res: *mut PtOctResult = ptr::null_mut();
    unsafe {
        assert_eq!(pt_solve_independent_oct(inst, 5, &mut res), PtStatus::Ok);
        assert!(pt_oct_feasible(res));
        assert_eq!(pt_oct_weight(res), 1);
        assert_eq!(pt_oct_vertex_count(res), 1);
        let mut buf = [0u32; 4];
        assert_eq!(pt_oct_copy_vertices(res, buf.as_mut_ptr(), 4), 1);
        assert!((1..=5).contains(&buf[0]));
        pt_oct_free(res);
        pt_instance_free(inst);
    }
}

#[test]
fn induced_matching_on_two_disjoint_edges() {
    let inst = parse("p edge 4 2\ne 1 2\ne 3 4\new 1 2 3\n");
    let mut res: *mut PtMatchingResult = ptr::null_mut();
    unsafe {
        assert_eq!(pt_solve_induced_matching(inst, 5, &mut res), PtStatus::Ok);
        assert_eq!(pt_matching_weight(res), 4);
        assert_eq!(pt_matching_edge_count(res), 2);
        let mut buf = [0u32; 4];
        assert_eq!(pt_matching_copy_edges(res, buf.as_mut_ptr(), 2), 2);
        assert_eq!(buf, [1, 2, 3, 4]);
        pt_matching_free(res);
        pt_instance_free(inst);
    }
}

#[test]
fn matching_rejects_small_t() {
    let inst = parse(C5);
    let mut res: *mut PtMatchingResult = ptr::null_mut();
    unsafe {
        assert_eq!(
            pt_solve_induced_matching(inst, 3, &mut res),
            PtStatus::InvalidInput
        );
        pt_instance_free(inst);
    }
}

#[test]
fn header_exports_the_api() {
    let header = include_str!("../include/ptfree.h");
    for symbol in [
        "pt_instance_parse",
        "pt_instance_free",
        "pt_check_ptfree",
        "pt_solve_mwis",
        "pt_solve_list3col",
        "pt_solve_cost3col",
        "pt_solve_independent_oct",
        "pt_solve_induced_matching",
        "pt_last_error_message",
        "PT_STATUS_NOT_PT_FREE",
    ] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}
