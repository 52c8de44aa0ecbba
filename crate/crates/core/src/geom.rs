//! Small planar geometry primitives shared across the pipeline.

use serde::{Deserialize, Serialize};

/// 2D point/vector in whatever frame the caller is working in.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn add(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x + other.x, self.y + other.y)
    }

    pub fn sub(self, other: Vec2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }

    pub fn scale(self, k: f64) -> Vec2 {
        Vec2::new(self.x * k, self.y * k)
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product; positive when `other` is
    /// counterclockwise of `self`.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Vec2) -> f64 {
        self.sub(other).norm()
    }
}

/// Distance from point `p` to the segment `a`-`b`.
pub fn point_segment_distance(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b.sub(a);
    let len2 = ab.dot(ab);
    if len2 <= 0.0 {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(ab) / len2).clamp(0.0, 1.0);
    p.dist(a.add(ab.scale(t)))
}

/// Axis-aligned image bounding box in pixels, left-top-width-height.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BBox {
    pub left: f64,
    pub top: f64,
    pub width: f64,
    pub height: f64,
}

impl BBox {
    pub const fn new(left: f64, top: f64, width: f64, height: f64) -> Self {
        Self {
            left,
            top,
            width,
            height,
        }
    }

    pub fn right(&self) -> f64 {
        self.left + self.width
    }

    pub fn bottom(&self) -> f64 {
        self.top + self.height
    }

    pub fn area(&self) -> f64 {
        self.width.max(0.0) * self.height.max(0.0)
    }

    pub fn center(&self) -> Vec2 {
        Vec2::new(self.left + self.width / 2.0, self.top + self.height / 2.0)
    }

    /// Intersection over union; 0 for disjoint boxes or when the union has
    /// zero area.
    pub fn iou(&self, other: &BBox) -> f64 {
        let ix = (self.right().min(other.right()) - self.left.max(other.left)).max(0.0);
        let iy = (self.bottom().min(other.bottom()) - self.top.max(other.top)).max(0.0);
        let inter = ix * iy;
        let union = self.area() + other.area() - inter;
        if union <= 0.0 {
            0.0
        } else {
            inter / union
        }
    }

    /// Clip to the image rectangle `[0,w] x [0,h]`; `None` when nothing is
    /// left.
    pub fn clip_to_image(&self, w: f64, h: f64) -> Option<BBox> {
        let left = self.left.max(0.0);
        let top = self.top.max(0.0);
        let right = self.right().min(w);
        let bottom = self.bottom().min(h);
        if right - left <= 0.0 || bottom - top <= 0.0 {
            None
        } else {
            Some(BBox::new(left, top, right - left, bottom - top))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iou_identical_boxes() {
        let b = BBox::new(10.0, 20.0, 30.0, 40.0);
        assert_eq!(b.iou(&b), 1.0);
    }

    #[test]
    fn iou_disjoint_boxes() {
        let a = BBox::new(0.0, 0.0, 10.0, 10.0);
        let b = BBox::new(20.0, 20.0, 10.0, 10.0);
        assert_eq!(a.iou(&b), 0.0);
    }

    #[test]
    fn iou_half_overlapping_unit_squares() {
        let a = BBox::new(0.0, 0.0, 1.0, 1.0);
        let b = BBox::new(0.5, 0.0, 1.0, 1.0);
        let expected = 0.5 / 1.5;
        assert!((a.iou(&b) - expected).abs() < 1e-12);
    }

    #[test]
    fn clip_outside_image_is_none() {
        let b = BBox::new(900.0, 0.0, 10.0, 10.0);
        assert!(b.clip_to_image(800.0, 600.0).is_none());
    }

    #[test]
    fn point_segment_distance_endpoints_and_interior() {
        let a = Vec2::new(0.0, 0.0);
        let b = Vec2::new(10.0, 0.0);
        assert!((point_segment_distance(Vec2::new(-3.0, 4.0), a, b) - 5.0).abs() < 1e-12);
        assert!((point_segment_distance(Vec2::new(5.0, 2.0), a, b) - 2.0).abs() < 1e-12);
    }
}
