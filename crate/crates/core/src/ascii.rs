//! Plain-text drawing of arc diagrams: a horizontal axis with marked
//! vertices, arcs drawn above or below it, one row per arc.

pub(crate) struct Arc {
    pub left: usize,
    pub right: usize,
    pub upper: bool,
}

/// Draws `axis` (already containing the vertex glyphs) with `labels` below
/// it and the arcs stacked outward, narrowest arcs nearest to the axis.
pub(crate) fn draw(axis: &str, labels: &str, arcs: &[Arc]) -> String {
    let width = arcs
        .iter()
        .map(|a| a.right + 1)
        .chain([axis.chars().count(), labels.chars().count()])
        .max()
        .unwrap_or(0);
    let mut ups: Vec<&Arc> = arcs.iter().filter(|a| a.upper).collect();
    let mut downs: Vec<&Arc> = arcs.iter().filter(|a| !a.upper).collect();
    for side in [&mut ups, &mut downs] {
        side.sort_by_key(|a| (a.right - a.left, a.left));
    }
    let above = layer(&ups, width);
    let below = layer(&downs, width);
    let mut out: Vec<String> = Vec::new();
    for row in above.iter().rev() {
        out.push(row.iter().collect::<String>().trim_end().to_string());
    }
    out.push(axis.trim_end().to_string());
    for row in &below {
        out.push(row.iter().collect::<String>().trim_end().to_string());
    }
    out.push(labels.trim_end().to_string());
    out.join("\n") + "\n"
}

fn layer(arcs: &[&Arc], width: usize) -> Vec<Vec<char>> {
    let mut rows = vec![vec![' '; width]; arcs.len()];
    for (r, a) in arcs.iter().enumerate() {
        for below in rows.iter_mut().take(r) {
            for c in [a.left, a.right] {
                below[c] = match below[c] {
                    ' ' => '|',
                    '-' => '+',
                    other => other,
                };
            }
        }
        let row = &mut rows[r];
        for cell in row.iter_mut().take(a.right).skip(a.left + 1) {
            if *cell == ' ' {
                *cell = '-';
            }
        }
        row[a.left] = '+';
        row[a.right] = '+';
    }
    rows
}

/// Places `text` centered on column `center` of `row`, growing it if needed.
pub(crate) fn put_centered(row: &mut Vec<char>, center: usize, text: &str) {
    let len = text.chars().count();
    let start = center.saturating_sub(len / 2);
    put_at(row, start, text);
}

pub(crate) fn put_at(row: &mut Vec<char>, start: usize, text: &str) {
    for (k, ch) in text.chars().enumerate() {
        if row.len() <= start + k {
            row.resize(start + k + 1, ' ');
        }
        row[start + k] = ch;
    }
}
