//! C ABI for the alcove-path library.
//!
//! The surface follows the usual opaque-handle pattern: `alc_root_system_new`
//! hands out a pointer that every other call takes, results come back as
//! heap-allocated JSON strings (released with `alc_string_free`), and every
//! fallible call returns an `AlcStatus`. The matching declarations live in
//! `include/alcove_path.h`; a test keeps the header and the exports in sync.
//!
//! Thread safety: handles are immutable after construction and may be shared
//! across threads; the last-error message is thread-local.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use alcove_path::alcove::build_reduced_chain;
use alcove_path::chevalley::chevalley_coeffs;
use alcove_path::error::Error;
use alcove_path::json;
use alcove_path::root_system::{Family, RootSystem};
use alcove_path::weyl::longest_element;
use alcove_path::Weight;

/// Status codes mirrored in the C header.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    Internal = 3,
}

pub struct AlcRootSystem {
    rs: RootSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(e: &Error) -> AlcStatus {
    match e {
        Error::InvalidInput(_) => AlcStatus::InvalidArgument,
        Error::Internal(_) => AlcStatus::Internal,
    }
}

fn guarded(f: impl FnOnce() -> AlcStatus) -> AlcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("panic across the FFI boundary");
            AlcStatus::Internal
        }
    }
}

/// Message for the most recent failure on this thread; valid until the next
/// failing call.
#[no_mangle]
pub extern "C" fn alc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn write_json(out: *mut *mut c_char, text: String) -> AlcStatus {
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            AlcStatus::Ok
        }
        Err(_) => {
            set_error("result contains an interior NUL byte");
            AlcStatus::Internal
        }
    }
}

unsafe fn slice_from<'a, T>(ptr: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

unsafe fn weight_from(rs: &RootSystem, ptr: *const i64, len: usize) -> Result<Weight, AlcStatus> {
    let coords = slice_from(ptr, len).ok_or_else(|| {
        set_error("weight pointer is NULL");
        AlcStatus::NullArgument
    })?;
    if coords.len() != rs.rank() {
        set_error("weight arity does not match the rank");
        return Err(AlcStatus::InvalidArgument);
    }
    Ok(Weight(coords.to_vec()))
}

unsafe fn word_from(
    rs: &RootSystem,
    ptr: *const u32,
    len: usize,
) -> Result<alcove_path::WeylElement, AlcStatus> {
    let letters = slice_from(ptr, len).ok_or_else(|| {
        set_error("word pointer is NULL");
        AlcStatus::NullArgument
    })?;
    let one_based: Vec<usize> = letters.iter().map(|&i| i as usize).collect();
    json::word_from_json(rs, &one_based).map_err(|e| {
        set_error(&e.to_string());
        status_of(&e)
    })
}

/// Build a root system. `family` is one of 'A', 'B', 'C', 'D', 'G'.
///
/// # Safety
/// `out` must be a valid pointer; the handle must be released with
/// `alc_root_system_free`.
#[no_mangle]
pub unsafe extern "C" fn alc_root_system_new(
    family: c_char,
    rank: u32,
    out: *mut *mut AlcRootSystem,
) -> AlcStatus {
    guarded(|| {
        if out.is_null() {
            set_error("output pointer is NULL");
            return AlcStatus::NullArgument;
        }
        let fam = match (family as u8 as char).to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'G' => Family::G,
            other => {
                set_error(&format!("unknown family '{other}'"));
                return AlcStatus::InvalidArgument;
            }
        };
        match RootSystem::build(fam, rank as usize) {
            Ok(rs) => {
                *out = Box::into_raw(Box::new(AlcRootSystem { rs }));
                AlcStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Release a handle from `alc_root_system_new`. NULL is a no-op.
///
/// # Safety
/// `handle` must come from `alc_root_system_new` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn alc_root_system_free(handle: *mut AlcRootSystem) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn alc_root_system_rank(handle: *const AlcRootSystem) -> u32 {
    if handle.is_null() {
        return 0;
    }
    (*handle).rs.rank() as u32
}

/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn alc_root_system_num_positive_roots(handle: *const AlcRootSystem) -> u32 {
    if handle.is_null() {
        return 0;
    }
    (*handle).rs.num_positive_roots() as u32
}

/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn alc_root_system_coxeter_number(handle: *const AlcRootSystem) -> u64 {
    if handle.is_null() {
        return 0;
    }
    (*handle).rs.coxeter_number() as u64
}

/// The root-system descriptor as JSON.
///
/// # Safety
/// `handle` live, `out_json` valid; free the string with `alc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn alc_root_system_json(
    handle: *const AlcRootSystem,
    out_json: *mut *mut c_char,
) -> AlcStatus {
    guarded(|| {
        if handle.is_null() || out_json.is_null() {
            set_error("NULL argument");
            return AlcStatus::NullArgument;
        }
        let text = serde_json::to_string(&json::root_system_json(&(*handle).rs))
            .expect("serialization is infallible");
        write_json(out_json, text)
    })
}

/// The reduced λ-chain as JSON. `weight` holds `weight_len` fundamental
/// coordinates (`weight_len` must equal the rank).
///
/// # Safety
/// `handle` live, pointers valid for the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn alc_chain_json(
    handle: *const AlcRootSystem,
    weight: *const i64,
    weight_len: usize,
    out_json: *mut *mut c_char,
) -> AlcStatus {
    guarded(|| {
        if handle.is_null() || out_json.is_null() {
            set_error("NULL argument");
            return AlcStatus::NullArgument;
        }
        let rs = &(*handle).rs;
        let lambda = match weight_from(rs, weight, weight_len) {
            Ok(w) => w,
            Err(status) => return status,
        };
        match build_reduced_chain(rs, &lambda) {
            Ok(chain) => {
                let text = serde_json::to_string(&json::chain_json(rs, &chain))
                    .expect("serialization is infallible");
                write_json(out_json, text)
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// The coefficient table of e^λ·`[O_u]` as JSON. `u_word` holds `u_len`
/// 1-based letters of a reduced word (length 0 for the identity).
///
/// # Safety
/// `handle` live, pointers valid for the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn alc_chevalley_json(
    handle: *const AlcRootSystem,
    weight: *const i64,
    weight_len: usize,
    u_word: *const u32,
    u_len: usize,
    out_json: *mut *mut c_char,
) -> AlcStatus {
    guarded(|| {
        if handle.is_null() || out_json.is_null() {
            set_error("NULL argument");
            return AlcStatus::NullArgument;
        }
        let rs = &(*handle).rs;
        let lambda = match weight_from(rs, weight, weight_len) {
            Ok(w) => w,
            Err(status) => return status,
        };
        let u = match word_from(rs, u_word, u_len) {
            Ok(w) => w,
            Err(status) => return status,
        };
        match build_reduced_chain(rs, &lambda) {
            Ok(chain) => {
                let table = chevalley_coeffs(rs, &chain, &u);
                let text = serde_json::to_string(&json::table_json(rs, &table))
                    .expect("serialization is infallible");
                write_json(out_json, text)
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// A character as JSON: the Demazure character of (λ, u) when a word is
/// given, the irreducible character of λ when `u_word` is NULL.
///
/// # Safety
/// `handle` live, pointers valid for the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn alc_character_json(
    handle: *const AlcRootSystem,
    weight: *const i64,
    weight_len: usize,
    u_word: *const u32,
    u_len: usize,
    out_json: *mut *mut c_char,
) -> AlcStatus {
    guarded(|| {
        if handle.is_null() || out_json.is_null() {
            set_error("NULL argument");
            return AlcStatus::NullArgument;
        }
        let rs = &(*handle).rs;
        let lambda = match weight_from(rs, weight, weight_len) {
            Ok(w) => w,
            Err(status) => return status,
        };
        let dem = if u_word.is_null() && u_len == 0 {
            None
        } else {
            match word_from(rs, u_word, u_len) {
                Ok(w) => Some(w),
                Err(status) => return status,
            }
        };
        let result = match &dem {
            Some(w) => alcove_path::characters::demazure_character(rs, &lambda, w),
            None => alcove_path::characters::irreducible_character(rs, &lambda),
        };
        match result {
            Ok(ch) => {
                let text =
                    serde_json::to_string(&json::character_json(rs, &lambda, dem.as_ref(), &ch))
                        .expect("serialization is infallible");
                write_json(out_json, text)
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// dim V_λ by the dimension formula.
///
/// # Safety
/// `handle` live, pointers valid for the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn alc_weyl_dimension(
    handle: *const AlcRootSystem,
    weight: *const i64,
    weight_len: usize,
    out_dim: *mut u64,
) -> AlcStatus {
    guarded(|| {
        if handle.is_null() || out_dim.is_null() {
            set_error("NULL argument");
            return AlcStatus::NullArgument;
        }
        let rs = &(*handle).rs;
        let lambda = match weight_from(rs, weight, weight_len) {
            Ok(w) => w,
            Err(status) => return status,
        };
        match alcove_path::characters::weyl_dimension(rs, &lambda) {
            Ok(dim) => {
                *out_dim = dim;
                AlcStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// ℓ(w∘), the number of positive roots.
///
/// # Safety
/// `handle` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn alc_longest_element_length(handle: *const AlcRootSystem) -> u32 {
    if handle.is_null() {
        return 0;
    }
    longest_element(&(*handle).rs).length()
}

/// Release a string returned by any `*_json` call. NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn alc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
