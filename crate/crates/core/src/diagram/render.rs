use std::fmt::Write;

use super::{End, FriezeK};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

pub fn render(f: &FriezeK, width: Option<usize>, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(f, width),
        RenderFormat::Svg => render_svg(f, width),
    }
}

/// Tail transversals to add so that the drawing has at least `width` top
/// points and at least one point overall.
fn extra(f: &FriezeK, width: Option<usize>) -> usize {
    let m = &f.matching;
    let k = width.unwrap_or(0).saturating_sub(m.top());
    if k == 0 && m.top() + m.bottom() == 0 {
        1
    } else {
        k
    }
}

fn label(i: usize) -> String {
    const LETTERS: &[u8] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if i < LETTERS.len() {
        (LETTERS[i] as char).to_string()
    } else {
        format!("t{i}")
    }
}

/// Two rows of thread labels: points sharing a label are joined.
pub fn render_ascii(f: &FriezeK, width: Option<usize>) -> String {
    let m = f.matching.padded(extra(f, width));
    let (n, b) = (m.top(), m.bottom());
    let mut top_lab = vec![String::new(); n];
    let mut bot_lab = vec![String::new(); b];
    let mut next = 0;
    let ends = (1..=n).map(End::Top).chain((1..=b).map(End::Bot));
    for e in ends {
        let seen = match e {
            End::Top(i) => !top_lab[i - 1].is_empty(),
            End::Bot(j) => !bot_lab[j - 1].is_empty(),
        };
        if seen {
            continue;
        }
        let l = label(next);
        next += 1;
        for x in [e, m.partner(e)] {
            match x {
                End::Top(i) => top_lab[i - 1] = l.clone(),
                End::Bot(j) => bot_lab[j - 1] = l.clone(),
            }
        }
    }
    let cols = n.max(b);
    let w = top_lab
        .iter()
        .chain(&bot_lab)
        .map(String::len)
        .chain(std::iter::once(cols.to_string().len()))
        .max()
        .unwrap_or(1);
    let row = |cells: Vec<String>| {
        cells
            .iter()
            .map(|c| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join(" ")
            .trim_end()
            .to_string()
    };
    let mut out = String::new();
    let idx = |k: usize| (1..=k).map(|i| i.to_string()).collect::<Vec<_>>();
    let _ = writeln!(out, "   {}", row(idx(n)));
    let _ = writeln!(out, "T  {}", row(top_lab));
    let _ = writeln!(out, "B  {}", row(bot_lab));
    let _ = writeln!(out, "   {}", row(idx(b)));
    let _ = writeln!(out, "loops: {}", f.loops);
    out
}

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;
const TOP_Y: f64 = 30.0;
const BOT_Y: f64 = 150.0;

fn x_of(i: usize) -> f64 {
    MARGIN + STEP * (i as f64 - 1.0)
}

/// A standalone SVG document with one path per thread.
pub fn render_svg(f: &FriezeK, width: Option<usize>) -> String {
    let m = f.matching.padded(extra(f, width));
    let cols = m.top().max(m.bottom()).max(1);
    let w = 2.0 * MARGIN + STEP * (cols as f64 - 1.0);
    let h = BOT_Y + 50.0;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(s, "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">");
    for (x, y) in m.pairs() {
        let d = match (x, y) {
            (End::Top(i), End::Top(j)) => {
                let dy = 20.0 * (j - i) as f64;
                format!(
                    "M {} {TOP_Y} C {} {} {} {} {} {TOP_Y}",
                    x_of(i),
                    x_of(i),
                    TOP_Y + dy,
                    x_of(j),
                    TOP_Y + dy,
                    x_of(j)
                )
            }
            (End::Bot(i), End::Bot(j)) => {
                let dy = 20.0 * (j - i) as f64;
                format!(
                    "M {} {BOT_Y} C {} {} {} {} {} {BOT_Y}",
                    x_of(i),
                    x_of(i),
                    BOT_Y - dy,
                    x_of(j),
                    BOT_Y - dy,
                    x_of(j)
                )
            }
            (End::Bot(j), End::Top(i)) | (End::Top(i), End::Bot(j)) => {
                let mid = (TOP_Y + BOT_Y) / 2.0;
                format!(
                    "M {} {TOP_Y} C {} {mid} {} {mid} {} {BOT_Y}",
                    x_of(i),
                    x_of(i),
                    x_of(j),
                    x_of(j)
                )
            }
        };
        let _ = writeln!(s, "<path d=\"{d}\"/>");
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">");
    for i in 1..=m.top() {
        let _ = writeln!(s, "<text x=\"{}\" y=\"{}\">{i}</text>", x_of(i), TOP_Y - 10.0);
    }
    for j in 1..=m.bottom() {
        let _ = writeln!(s, "<text x=\"{}\" y=\"{}\">{j}</text>", x_of(j), BOT_Y + 20.0);
    }
    let _ = writeln!(s, "</g>");
    if f.loops > 0 {
        let y = BOT_Y + 38.0;
        let _ = writeln!(
            s,
            "<g class=\"loop-legend\"><circle cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"none\" stroke=\"black\"/><text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\">x {}</text></g>",
            MARGIN,
            y - 4.0,
            MARGIN + 12.0,
            y,
            f.loops
        );
    }
    s.push_str("</svg>\n");
    s
}
