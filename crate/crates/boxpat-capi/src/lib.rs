//! C ABI for the boxpat enumeration engine.
//!
//! Conventions, mirrored by `include/boxpat.h`:
//! - Every fallible function returns a `boxpat_status` code matching the CLI
//!   exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 bound
//!   exceeded, 4 precondition violation.
//! - On failure, a thread-local message is available via
//!   [`boxpat_last_error`]; it stays valid until the next failing call on the
//!   same thread.
//! - Strings returned through `char **` out-parameters are NUL-terminated,
//!   owned by the caller, and must be released with [`boxpat_string_free`].
//! - The series object is an opaque handle created by [`boxpat_series_new`]
//!   and released with [`boxpat_series_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use boxpat::algebra::TSeries;
use boxpat::lego::{self, LegoWall};
use boxpat::perm::{bond_count, box1_count, rect_count, Permutation};
use boxpat::signed::{bad_pair_count, SignedPermutation};
use boxpat::transfer;
use boxpat::verify;
use boxpat::word::{box_count_word, k_bond_count, rect_count_word, Word};
use boxpat::Error;

/// Status codes; identical to the CLI exit codes.
pub const BOXPAT_OK: i32 = 0;
pub const BOXPAT_EVERIFY: i32 = 1;
pub const BOXPAT_EPARSE: i32 = 2;
pub const BOXPAT_EBOUND: i32 = 3;
pub const BOXPAT_EPRECOND: i32 = 4;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL stripped");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => BOXPAT_EPARSE,
        Error::BoundExceeded(_) | Error::DegreeExceeded { .. } => BOXPAT_EBOUND,
        _ => BOXPAT_EPRECOND,
    }
}

fn fail(e: &Error) -> i32 {
    set_error(&e.to_string());
    status_of(e)
}

fn fail_parse(msg: &str) -> i32 {
    set_error(msg);
    BOXPAT_EPARSE
}

/// # Safety
/// `s` must be NUL-terminated and valid for reads.
unsafe fn cstr<'a>(s: *const c_char) -> Result<&'a str, i32> {
    if s.is_null() {
        set_error("null pointer argument");
        return Err(BOXPAT_EPRECOND);
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail_parse("argument is not valid UTF-8"))
}

fn out_string(out: *mut *mut c_char, s: String) -> i32 {
    if out.is_null() {
        set_error("null output pointer");
        return BOXPAT_EPRECOND;
    }
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            BOXPAT_OK
        }
        Err(_) => fail_parse("output contains interior NUL"),
    }
}

/// Pointer to the current thread's last error message (empty string if none).
/// The pointer is valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn boxpat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Accepts NULL.
///
/// # Safety
/// `s` must have been returned by a `boxpat_*` function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn boxpat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn stat_on_perm(sigma: &Permutation, stat: &str) -> Result<usize, Error> {
    match parse_stat(stat)? {
        Stat::Bond => Ok(bond_count(sigma)),
        Stat::Box1 => Ok(box1_count(sigma)),
        Stat::Kbox(k) => Ok(rect_count(sigma, k, k)),
        Stat::Rect(a, b) => Ok(rect_count(sigma, a, b)),
        Stat::Kbond(k) => {
            let w = Word::new(sigma.values().to_vec(), sigma.len() as u32)?;
            Ok(k_bond_count(&w, k))
        }
    }
}

fn stat_on_word(w: &Word, stat: &str) -> Result<usize, Error> {
    match parse_stat(stat)? {
        Stat::Bond => Ok(k_bond_count(w, 1)),
        Stat::Box1 => Ok(box_count_word(w, 1)),
        Stat::Kbox(k) => Ok(box_count_word(w, k)),
        Stat::Rect(a, b) => Ok(rect_count_word(w, a, b)),
        Stat::Kbond(k) => Ok(k_bond_count(w, k)),
    }
}

enum Stat {
    Bond,
    Box1,
    Kbox(u32),
    Rect(u32, u32),
    Kbond(u32),
}

fn parse_stat(s: &str) -> Result<Stat, Error> {
    let bad = || Error::Parse(format!("unknown statistic '{s}'"));
    match s {
        "bond" => return Ok(Stat::Bond),
        "box1" => return Ok(Stat::Box1),
        _ => {}
    }
    if let Some(k) = s.strip_prefix("kbox:") {
        return k.parse().map(Stat::Kbox).map_err(|_| bad());
    }
    if let Some(k) = s.strip_prefix("kbond:") {
        return k.parse().map(Stat::Kbond).map_err(|_| bad());
    }
    if let Some(ab) = s.strip_prefix("rect:") {
        let (a, b) = ab.split_once(',').ok_or_else(bad)?;
        let a = a.parse().map_err(|_| bad())?;
        let b = b.parse().map_err(|_| bad())?;
        return Ok(Stat::Rect(a, b));
    }
    Err(bad())
}

/// Evaluate a statistic ("bond", "box1", "kbox:k", "rect:a,b", "kbond:k") on
/// a permutation given in the text format (digits or comma-separated).
///
/// # Safety
/// `perm` and `stat` must be valid NUL-terminated strings; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn boxpat_perm_stat(
    perm: *const c_char,
    stat: *const c_char,
    out: *mut u64,
) -> i32 {
    let (perm, stat) = match (cstr(perm), cstr(stat)) {
        (Ok(p), Ok(s)) => (p, s),
        (Err(c), _) | (_, Err(c)) => return c,
    };
    if out.is_null() {
        set_error("null output pointer");
        return BOXPAT_EPRECOND;
    }
    let sigma = match Permutation::parse(perm) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    match stat_on_perm(&sigma, stat) {
        Ok(v) => {
            *out = v as u64;
            BOXPAT_OK
        }
        Err(e) => fail(&e),
    }
}

/// Evaluate a statistic on a word over the alphabet {1, ..., alphabet}.
///
/// # Safety
/// `word` and `stat` must be valid NUL-terminated strings; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn boxpat_word_stat(
    alphabet: u32,
    word: *const c_char,
    stat: *const c_char,
    out: *mut u64,
) -> i32 {
    let (word, stat) = match (cstr(word), cstr(stat)) {
        (Ok(w), Ok(s)) => (w, s),
        (Err(c), _) | (_, Err(c)) => return c,
    };
    if out.is_null() {
        set_error("null output pointer");
        return BOXPAT_EPRECOND;
    }
    let w = match Word::parse(word, alphabet) {
        Ok(w) => w,
        Err(e) => return fail(&e),
    };
    match stat_on_word(&w, stat) {
        Ok(v) => {
            *out = v as u64;
            BOXPAT_OK
        }
        Err(e) => fail(&e),
    }
}

/// Count bad pairs of a signed permutation ("-2,1,3,-4" or "2',1,3,4'").
///
/// # Safety
/// `sperm` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn boxpat_sperm_bad_pairs(sperm: *const c_char, out: *mut u64) -> i32 {
    let sperm = match cstr(sperm) {
        Ok(s) => s,
        Err(c) => return c,
    };
    if out.is_null() {
        set_error("null output pointer");
        return BOXPAT_EPRECOND;
    }
    match SignedPermutation::parse(sperm) {
        Ok(pi) => {
            *out = bad_pair_count(&pi) as u64;
            BOXPAT_OK
        }
        Err(e) => fail(&e),
    }
}

/// Opaque handle to an expanded transfer-system series.
pub struct BoxpatSeries {
    series: TSeries,
}

fn build_series(system: &str, ell: u32, k: u32, order: usize) -> Result<TSeries, Error> {
    match system {
        "kbond" => Ok(transfer::kbond_series(ell, k, order)),
        "rect1k" => Ok(transfer::rect1k_series(ell, k, order)),
        "box2" => Ok(transfer::box2_series(ell, order)),
        other => Err(Error::Parse(format!("unknown system '{other}'"))),
    }
}

/// Expand a transfer system ("kbond", "rect1k", or "box2"; k is ignored for
/// box2) to the given t-order and return an opaque handle.
///
/// # Safety
/// `system` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn boxpat_series_new(
    system: *const c_char,
    ell: u32,
    k: u32,
    order: usize,
    out: *mut *mut BoxpatSeries,
) -> i32 {
    let system = match cstr(system) {
        Ok(s) => s,
        Err(c) => return c,
    };
    if out.is_null() {
        set_error("null output pointer");
        return BOXPAT_EPRECOND;
    }
    if order > 64 {
        set_error("series order exceeds the maximum 64");
        return BOXPAT_EBOUND;
    }
    match build_series(system, ell, k, order) {
        Ok(series) => {
            *out = Box::into_raw(Box::new(BoxpatSeries { series }));
            BOXPAT_OK
        }
        Err(e) => {
            *out = ptr::null_mut();
            fail(&e)
        }
    }
}

/// Release a series handle. Accepts NULL.
///
/// # Safety
/// `s` must come from [`boxpat_series_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn boxpat_series_free(s: *mut BoxpatSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// The t-order the series was expanded to.
///
/// # Safety
/// `s` must be a live handle from [`boxpat_series_new`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_series_order(s: *const BoxpatSeries) -> usize {
    if s.is_null() {
        return 0;
    }
    (*s).series.order()
}

/// Decimal string for the coefficient of x^x_power t^t_order.
///
/// # Safety
/// `s` must be a live handle; `out` a valid pointer; free the string with
/// [`boxpat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_series_coeff(
    s: *const BoxpatSeries,
    t_order: usize,
    x_power: usize,
    out: *mut *mut c_char,
) -> i32 {
    if s.is_null() {
        set_error("null series handle");
        return BOXPAT_EPRECOND;
    }
    let series = &(*s).series;
    if t_order > series.order() {
        set_error("t_order beyond the expanded order");
        return BOXPAT_EBOUND;
    }
    out_string(out, series.coeff(t_order).coeff(x_power).to_string())
}

/// Whole series as JSON: an array of {"t_order": n, "coeffs": ["c0", ...]}
/// objects, coefficient strings lowest x-degree first.
///
/// # Safety
/// `s` must be a live handle; `out` a valid pointer; free with
/// [`boxpat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_series_json(
    s: *const BoxpatSeries,
    out: *mut *mut c_char,
) -> i32 {
    if s.is_null() {
        set_error("null series handle");
        return BOXPAT_EPRECOND;
    }
    let series = &(*s).series;
    let mut json = String::from("[");
    for (n, c) in series.coeffs().iter().enumerate() {
        if n > 0 {
            json.push(',');
        }
        json.push_str(&format!("{{\"t_order\":{n},\"coeffs\":["));
        for (i, coeff) in c.to_decimal_strings().iter().enumerate() {
            if i > 0 {
                json.push(',');
            }
            json.push_str(&format!("\"{coeff}\""));
        }
        json.push_str("]}");
    }
    json.push(']');
    out_string(out, json)
}

/// Closed-form generating function ("kbond" or "rect1k") as JSON
/// {"num": {...}, "den": {...}} with "a,b" keys mapping x^a t^b to a decimal
/// coefficient string.
///
/// # Safety
/// `system` must be a valid NUL-terminated string; `out` a valid pointer;
/// free with [`boxpat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_gf_json(
    system: *const c_char,
    ell: u32,
    k: u32,
    out: *mut *mut c_char,
) -> i32 {
    let system = match cstr(system) {
        Ok(s) => s,
        Err(c) => return c,
    };
    let gf = match system {
        "kbond" => transfer::kbond_gf(ell, k),
        "rect1k" => transfer::rect1k_gf(ell, k),
        other => Err(Error::Parse(format!("no closed form for system '{other}'"))),
    };
    let gf = match gf {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let side = |p: &boxpat::algebra::BiPoly| {
        let mut s = String::from("{");
        let mut first = true;
        for (b, tc) in p.t_coeffs().iter().enumerate() {
            for (a, c) in tc.coeffs().iter().enumerate() {
                if c == &num_bigint::BigInt::ZERO {
                    continue;
                }
                if !first {
                    s.push(',');
                }
                first = false;
                s.push_str(&format!("\"{a},{b}\":\"{c}\""));
            }
        }
        s.push('}');
        s
    };
    out_string(out, format!("{{\"num\":{},\"den\":{}}}", side(gf.num()), side(gf.den())))
}

/// Run a verification target ("hardin-3", ..., "all"); writes the full text
/// report and returns BOXPAT_OK on pass, BOXPAT_EVERIFY on mismatch.
///
/// # Safety
/// `target` must be a valid NUL-terminated string; `report_out` a valid
/// pointer; free the report with [`boxpat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_verify(
    target: *const c_char,
    report_out: *mut *mut c_char,
) -> i32 {
    let target = match cstr(target) {
        Ok(t) => t,
        Err(c) => return c,
    };
    let reports = match verify::run(target) {
        Some(r) => r,
        None => return fail_parse(&format!("unknown verify target '{target}'")),
    };
    let all_pass = reports.iter().all(|r| r.all_pass());
    let text: String = reports.iter().map(|r| r.render()).collect();
    let code = out_string(report_out, text);
    if code != BOXPAT_OK {
        return code;
    }
    if all_pass {
        BOXPAT_OK
    } else {
        set_error("verification mismatch; see report");
        BOXPAT_EVERIFY
    }
}

/// Number of stable walls (bricks 2, 3, 4) as a decimal string.
///
/// # Safety
/// `out` must be a valid pointer; free with [`boxpat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_lego_count(
    width: u32,
    height: usize,
    out: *mut *mut c_char,
) -> i32 {
    if width == 0 || width > 32 || height > 4096 {
        set_error("wall dimensions out of bounds");
        return BOXPAT_EBOUND;
    }
    out_string(out, lego::count_stable_walls(width, &[2, 3, 4], height).to_string())
}

/// Encode a 1-box-avoiding word over {1..5} as a width-7 wall (text format:
/// rows bottom to top, bricks "+"-separated).
///
/// # Safety
/// `word` must be a valid NUL-terminated string; `wall_out` a valid pointer;
/// free with [`boxpat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_lego_encode(
    word: *const c_char,
    wall_out: *mut *mut c_char,
) -> i32 {
    let word = match cstr(word) {
        Ok(w) => w,
        Err(c) => return c,
    };
    let w = match Word::parse(word, 5) {
        Ok(w) => w,
        Err(e) => return fail(&e),
    };
    match lego::lego_encode(&w) {
        Ok(wall) => out_string(wall_out, format!("{wall}\n")),
        Err(e) => fail(&e),
    }
}

/// Decode a wall in the text format back to its word over {1..5}.
///
/// # Safety
/// `wall` must be a valid NUL-terminated string; `word_out` a valid pointer;
/// free with [`boxpat_string_free`].
#[no_mangle]
pub unsafe extern "C" fn boxpat_lego_decode(
    width: u32,
    wall: *const c_char,
    word_out: *mut *mut c_char,
) -> i32 {
    let wall = match cstr(wall) {
        Ok(w) => w,
        Err(c) => return c,
    };
    let parsed = match LegoWall::parse(width, wall) {
        Ok(w) => w,
        Err(e) => return fail(&e),
    };
    match lego::lego_decode(&parsed) {
        Ok(w) => out_string(word_out, w.to_string()),
        Err(e) => fail(&e),
    }
}
