//! Ordered column space with O(1) insertion next to a known column.

pub type Col = u32;

const NIL: Col = Col::MAX;

/// Doubly linked list of columns; `link[c] = [prev, next]`.
#[derive(Debug, Clone)]
pub struct Columns {
    link: Vec<[Col; 2]>,
    head: Col,
}

impl Columns {
    /// `count` columns in left-to-right order `0..count`.
    pub fn new(count: usize) -> Self {
        let link = (0..count as Col)
            .map(|i| {
                let prev = if i > 0 { i - 1 } else { NIL };
                let next = if i + 1 < count as Col { i + 1 } else { NIL };
                [prev, next]
            })
            .collect();
        Columns {
            link,
            head: if count > 0 { 0 } else { NIL },
        }
    }

    pub fn len(&self) -> usize {
        self.link.len()
    }

    pub fn next(&self, c: Col) -> Option<Col> {
        Some(self.link[c as usize][1]).filter(|&x| x != NIL)
    }

    pub fn prev(&self, c: Col) -> Option<Col> {
        Some(self.link[c as usize][0]).filter(|&x| x != NIL)
    }

    pub fn insert_after(&mut self, c: Col) -> Col {
        let id = self.link.len() as Col;
        let after = self.link[c as usize][1];
        self.link.push([c, after]);
        self.link[c as usize][1] = id;
        if after != NIL {
            self.link[after as usize][0] = id;
        }
        id
    }

    pub fn insert_before(&mut self, c: Col) -> Col {
        let id = self.link.len() as Col;
        let before = self.link[c as usize][0];
        self.link.push([before, c]);
        self.link[c as usize][0] = id;
        if before != NIL {
            self.link[before as usize][1] = id;
        } else {
            self.head = id;
        }
        id
    }

    /// Left-to-right position of every column.
    pub fn positions(&self) -> Vec<u32> {
        let mut x = vec![0u32; self.len()];
        let mut c = self.head;
        let mut i = 0;
        while c != NIL {
            x[c as usize] = i;
            i += 1;
            c = self.link[c as usize][1];
        }
        x
    }
}
