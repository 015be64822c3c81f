//! Exercises the C entry points from Rust exactly as a binding would.

use discut_ffi::*;

fn solve(n: u32, pairs: &[u32]) -> (i32, String, Vec<Vec<u32>>) {
    unsafe {
        let mut g: *mut DiscutGraph = std::ptr::null_mut();
        assert_eq!(
            discut_graph_new(n, pairs.as_ptr(), pairs.len() / 2, &mut g),
            DiscutStatus::Ok
        );
        assert_eq!(discut_graph_n(g), n);
        let mut v: *mut DiscutVerdict = std::ptr::null_mut();
        assert_eq!(discut_solve_auto(g, 0, &mut v), DiscutStatus::Ok);
        let answer = discut_verdict_answer(v);
        let reason = std::ffi::CStr::from_ptr(discut_verdict_reason(v))
            .to_string_lossy()
            .into_owned();
        let mut parts = Vec::new();
        for part in 0..4 {
            let len = discut_verdict_part_len(v, part);
            let mut buf = vec![0u32; len];
            let written = discut_verdict_part(v, part, buf.as_mut_ptr(), len);
            assert_eq!(written, len);
            parts.push(buf);
        }
        discut_verdict_free(v);
        discut_graph_free(g);
        (answer, reason, parts)
    }
}

#[test]
fn c4_yes_with_partition() {
    let (answer, _, parts) = solve(4, &[0, 1, 1, 2, 2, 3, 3, 0]);
    assert_eq!(answer, 1);
    assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), 4);
    // No edge between parts 0 and 2 nor 1 and 3 in C4's canonical answer.
    assert_eq!(parts[0].len(), 1);
}

#[test]
fn k4_no() {
    let (answer, reason, parts) = solve(4, &[0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3]);
    assert_eq!(answer, 0);
    assert_eq!(reason, "diameter-1");
    assert!(parts.iter().all(Vec::is_empty));
}

#[test]
fn status_codes_and_null_safety() {
    unsafe {
        let mut g: *mut DiscutGraph = std::ptr::null_mut();
        // Self-loop is invalid input.
        assert_eq!(
            discut_graph_new(2, [0u32, 0].as_ptr(), 1, &mut g),
            DiscutStatus::InvalidInput
        );
        // Null out-pointer.
        assert_eq!(
            discut_graph_new(2, [0u32, 1].as_ptr(), 1, std::ptr::null_mut()),
            DiscutStatus::NullArgument
        );
        // Disconnected input is invalid for solve.
        assert_eq!(
            discut_graph_new(4, [0u32, 1, 2, 3].as_ptr(), 2, &mut g),
            DiscutStatus::Ok
        );
        let mut v: *mut DiscutVerdict = std::ptr::null_mut();
        assert_eq!(discut_solve_auto(g, 0, &mut v), DiscutStatus::InvalidInput);
        discut_graph_free(g);
        // Null handles are tolerated by the accessors.
        assert_eq!(discut_verdict_answer(std::ptr::null()), -1);
        assert_eq!(discut_graph_n(std::ptr::null()), 0);
        discut_verdict_free(std::ptr::null_mut());
        discut_graph_free(std::ptr::null_mut());
    }
}

#[test]
fn parse_and_oracle_routes() {
    unsafe {
        let text = std::ffi::CString::new("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        let mut g: *mut DiscutGraph = std::ptr::null_mut();
        assert_eq!(discut_graph_parse(text.as_ptr(), &mut g), DiscutStatus::Ok);
        assert_eq!(discut_graph_m(g), 5);
        let mut v: *mut DiscutVerdict = std::ptr::null_mut();
        assert_eq!(discut_solve_oracle(g, 0, &mut v), DiscutStatus::Ok);
        assert_eq!(discut_verdict_answer(v), 1);
        discut_verdict_free(v);
        // A starved budget reports unresolved through the answer code.
        let mut v2: *mut DiscutVerdict = std::ptr::null_mut();
        assert_eq!(discut_solve_oracle(g, 2, &mut v2), DiscutStatus::Ok);
        assert_eq!(discut_verdict_answer(v2), 2);
        discut_verdict_free(v2);
        discut_graph_free(g);
        assert!(!discut_version().is_null());
    }
}
