//! Published tables, embedded from `data/`.

pub const FIG_K: &str = include_str!("../data/figK.txt");
pub const FIG_A: &str = include_str!("../data/figA.txt");
pub const FIG_B: &str = include_str!("../data/figB.txt");

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn fig_k() -> Vec<u128> {
    content_lines(FIG_K)
        .flat_map(str::split_whitespace)
        .map(|v| v.parse().expect("golden figK holds integers"))
        .collect()
}

/// One block of the degree table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockRow {
    pub degree: u64,
    pub key: String,
    pub entries: Vec<String>,
}

impl BlockRow {
    pub fn render(&self) -> String {
        format!("{} | {} | {}", self.degree, self.key, self.entries.join(", "))
    }
}

pub fn parse_blocks(text: &str) -> Vec<BlockRow> {
    content_lines(text)
        .map(|l| {
            let mut parts = l.splitn(3, '|').map(str::trim);
            let degree = parts.next().and_then(|d| d.parse().ok()).expect("degree column");
            let key = parts.next().expect("field column").to_string();
            let entries = split_top_level(parts.next().expect("entries column"));
            BlockRow { degree, key, entries }
        })
        .collect()
}

/// Split on commas outside braces, so `A_{n,5-n}` stays whole.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur.trim().to_string());
    out
}

pub fn fig_a() -> Vec<BlockRow> {
    parse_blocks(FIG_A)
}

/// Rows of the closed-form table, as `|`-separated cells.
pub fn fig_b() -> Vec<Vec<String>> {
    content_lines(FIG_B).map(split_cells).collect()
}

pub fn split_cells(l: &str) -> Vec<String> {
    l.split('|').map(|c| c.trim().to_string()).collect()
}
