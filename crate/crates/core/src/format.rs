//! Report formatting: digit grouping and elapsed-time fields.

use std::time::Duration;

/// Groups digits in threes: `95040` -> `95,040`.
pub fn commify(n: impl Into<u128>) -> String {
    let digits = n.into().to_string();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3);
    for (k, ch) in digits.chars().enumerate() {
        if k > 0 && (digits.len() - k) % 3 == 0 {
            out.push(',');
        }
        out.push(ch);
    }
    out
}

/// Elapsed time as right-justified day/hour/minute/second/millisecond
/// fields, e.g. `  0d 1h 2m 3s  4ms`.
pub fn format_time(elapsed: Duration) -> String {
    let mut ms = elapsed.as_millis();
    let day = 24 * 60 * 60 * 1000;
    let d = ms / day;
    ms -= d * day;
    let h = ms / 3_600_000;
    ms -= h * 3_600_000;
    let m = ms / 60_000;
    ms -= m * 60_000;
    let s = ms / 1000;
    ms -= s * 1000;
    format!("{d:>3}d{h:>2}h{m:>2}m{s:>2}s{ms:>3}ms")
}

/// Progress line: `<done>/<total>  <group>  <elapsed>`.
pub fn progress_line(done: u128, total: u128, group: &str, elapsed: Duration) -> String {
    format!(
        "{:>15}/{}  {}  {}",
        commify(done),
        commify(total),
        group,
        format_time(elapsed)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouping() {
        assert_eq!(commify(0u32), "0");
        assert_eq!(commify(999u32), "999");
        assert_eq!(commify(7920u32), "7,920");
        assert_eq!(commify(95040u32), "95,040");
        assert_eq!(commify(1_000_000u32), "1,000,000");
        assert_eq!(commify(244_823_040u64), "244,823,040");
    }

    #[test]
    fn time_fields() {
        assert_eq!(format_time(Duration::from_millis(0)), "  0d 0h 0m 0s  0ms");
        assert_eq!(
            format_time(Duration::from_millis(((26 * 60 + 3) * 60 + 4) * 1000 + 56)),
            "  1d 2h 3m 4s 56ms"
        );
    }

    #[test]
    fn progress() {
        assert_eq!(
            progress_line(5000, 708_620, "M11", Duration::from_millis(1500)),
            "          5,000/708,620  M11    0d 0h 0m 1s500ms"
        );
    }
}
