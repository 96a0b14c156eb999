//! ASCII diagrams of marked colored partitions.
//!
//! Each box shows its color. The mark of every row sits on one vertical wall
//! `|`; a row with mark `μ <= 0` starts `|μ|` cells right of the wall.

use colored_quiver::MarkedColoredPartition;

fn cell(color: usize, n: usize, signs: bool) -> String {
    if signs && n == 2 {
        if color == 0 { "+" } else { "-" }.to_string()
    } else {
        color.to_string()
    }
}

/// One line per row. The wall is drawn only when some mark is nonzero.
pub fn render(mcp: &MarkedColoredPartition, signs: bool) -> Vec<String> {
    let n = mcp.modulus();
    let width = if signs && n == 2 { 1 } else { (n - 1).max(1).to_string().len() };
    let sep = if width == 1 { "" } else { " " };
    let blank = " ".repeat(width);
    let marked = mcp.marks().iter().any(|&m| m != 0);
    let wall = mcp.marks().iter().copied().max().unwrap_or(0).max(0);

    (1..=mcp.len())
        .map(|i| {
            let len = mcp.lengths()[i - 1];
            let boxes: Vec<String> = (1..=len)
                .map(|j| {
                    let c = mcp.base().box_color(i, j).expect("box in range").rep();
                    format!("{:>width$}", cell(c, n, signs))
                })
                .collect();
            if !marked {
                return boxes.join(sep);
            }
            let mu = mcp.marks()[i - 1];
            let mut parts: Vec<String> = Vec::new();
            if mu > 0 {
                let split = mu as usize;
                parts.extend(std::iter::repeat_n(blank.clone(), (wall - mu) as usize));
                parts.extend(boxes[..split].iter().cloned());
                parts.push("|".into());
                parts.extend(boxes[split..].iter().cloned());
            } else {
                parts.extend(std::iter::repeat_n(blank.clone(), wall as usize));
                parts.push("|".into());
                parts.extend(std::iter::repeat_n(blank.clone(), (-mu) as usize));
                parts.extend(boxes);
            }
            parts.join(sep).trim_end().to_string()
        })
        .collect()
}
