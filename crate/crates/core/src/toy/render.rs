use super::EpistemicState;

pub(crate) const ON: char = '#';
pub(crate) const OFF: char = '.';

/// Text picture of a state: `#` for cells in the support, `.` otherwise.
///
/// One system gives one line with index 1 leftmost. Two systems give four
/// lines of four glyphs, row 4 first so rows read upwards, column 1 leftmost.
/// Lines are joined with `\n`, without a trailing newline.
pub fn render_grid(state: &EpistemicState) -> String {
    match state.n_systems() {
        1 => (0..4).map(|i| glyph(state, &[i])).collect(),
        _ => (0..4)
            .rev()
            .map(|r| (0..4).map(|c| glyph(state, &[r, c])).collect::<String>())
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn glyph(state: &EpistemicState, offsets: &[u8]) -> char {
    let indices: Vec<u8> = offsets.iter().map(|o| o + 1).collect();
    let cell = super::OnticCell::from_indices(&indices).expect("offsets in range");
    if state.contains(&cell) {
        ON
    } else {
        OFF
    }
}
