//! Constituency trees as diagrams: leaves become word states, inner nodes
//! become production boxes contracting their children.

use strand_core::{BBox, Diagram, Error, Ob, Ty};

enum Node {
    Leaf { label: String, word: String },
    Inner { label: String, children: Vec<Node> },
}

/// Reads an s-expression tree like `(n (a black) (n (n metal) (n fan)))`
/// into a diagram: each `(label word)` leaf is a word state of type
/// `label`, each inner node a production box from its children's labels to
/// its own.
pub fn from_tree(src: &str) -> Result<Diagram, Error> {
    let tokens = tokenize(src);
    let mut pos = 0;
    let root = parse_node(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(ill("trailing input after the root node"));
    }
    diagram_of(&root)
}

fn ill(msg: &str) -> Error {
    Error::IllFormedTree(msg.to_string())
}

fn tokenize(src: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut atom = String::new();
    for c in src.chars() {
        match c {
            '(' | ')' => {
                if !atom.is_empty() {
                    tokens.push(std::mem::take(&mut atom));
                }
                tokens.push(c.to_string());
            }
            c if c.is_whitespace() => {
                if !atom.is_empty() {
                    tokens.push(std::mem::take(&mut atom));
                }
            }
            c => atom.push(c),
        }
    }
    if !atom.is_empty() {
        tokens.push(atom);
    }
    tokens
}

fn parse_node(tokens: &[String], pos: &mut usize) -> Result<Node, Error> {
    if tokens.get(*pos).map(String::as_str) != Some("(") {
        return Err(ill("expected ("));
    }
    *pos += 1;
    let label = match tokens.get(*pos).map(String::as_str) {
        Some("(") | Some(")") | None => return Err(ill("node without a label")),
        Some(l) => l.to_string(),
    };
    *pos += 1;
    let mut atoms = Vec::new();
    let mut nodes = Vec::new();
    loop {
        match tokens.get(*pos).map(String::as_str) {
            Some(")") => {
                *pos += 1;
                break;
            }
            Some("(") => nodes.push(parse_node(tokens, pos)?),
            Some(word) => {
                atoms.push(word.to_string());
                *pos += 1;
            }
            None => return Err(ill("unbalanced parentheses")),
        }
    }
    match (atoms.len(), nodes.len()) {
        (1, 0) => Ok(Node::Leaf { label, word: atoms.pop().unwrap() }),
        (0, n) if n > 0 => Ok(Node::Inner { label, children: nodes }),
        (0, 0) => Err(ill("node with no children")),
        _ => Err(ill("words and subtrees cannot mix under one node")),
    }
}

fn diagram_of(node: &Node) -> Result<Diagram, Error> {
    match node {
        Node::Leaf { label, word } => {
            let cod = Ty::one(Ob::basic(label));
            Ok(Diagram::from_box(BBox::word(word, Ty::unit(), cod)))
        }
        Node::Inner { label, children } => {
            let mut d = Diagram::id(Ty::unit());
            let mut dom = Ty::unit();
            let mut rule = format!("{} <-", label);
            for child in children {
                d = d.tensor(&diagram_of(child)?);
                let l = child_label(child);
                dom = dom.tensor(&Ty::one(Ob::basic(l)));
                rule.push(' ');
                rule.push_str(l);
            }
            let cod = Ty::one(Ob::basic(label));
            d.then(&Diagram::from_box(BBox::plain(rule, dom, cod)))
        }
    }
}

fn child_label(node: &Node) -> &str {
    match node {
        Node::Leaf { label, .. } | Node::Inner { label, .. } => label,
    }
}
