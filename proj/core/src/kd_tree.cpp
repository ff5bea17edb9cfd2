#include "rne/kd_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace rne {

namespace {

double coord(const Vec2d& p, int axis) { return axis == 0 ? p.x : p.y; }

}  // namespace

void KdTree2D::insert(const Vec2d& p, int id) {
  const int idx = static_cast<int>(points_.size());
  points_.push_back({p, id, -1, -1});
  if (points_.size() >= rebuild_at_) {
    rebuild();
    rebuild_at_ = points_.size() * 2;
    return;
  }
  if (root_ == -1) {
    root_ = idx;
    return;
  }
  int cur = root_;
  int axis = 0;
  for (;;) {
    Entry& e = points_[cur];
    int& child = coord(p, axis) < coord(e.p, axis) ? e.left : e.right;
    if (child == -1) {
      child = idx;
      return;
    }
    cur = child;
    axis ^= 1;
  }
}

void KdTree2D::rebuild() {
  std::vector<int> order(points_.size());
  std::iota(order.begin(), order.end(), 0);
  for (Entry& e : points_) e.left = e.right = -1;
  root_ = build_range(order, 0, static_cast<int>(order.size()), 0);
}

int KdTree2D::build_range(std::vector<int>& order, int lo, int hi, int axis) {
  if (lo >= hi) return -1;
  const int mid = lo + (hi - lo) / 2;
  std::nth_element(order.begin() + lo, order.begin() + mid, order.begin() + hi,
                   [&](int a, int b) {
                     const double ca = coord(points_[a].p, axis);
                     const double cb = coord(points_[b].p, axis);
                     if (ca != cb) return ca < cb;
                     return points_[a].id < points_[b].id;
                   });
  const int node = order[mid];
  points_[node].left = build_range(order, lo, mid, axis ^ 1);
  points_[node].right = build_range(order, mid + 1, hi, axis ^ 1);
  return node;
}

int KdTree2D::nearest(const Vec2d& q) const {
  if (root_ == -1) return -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  int best_id = -1;
  nearest_walk(root_, 0, q, best_d2, best_id);
  return best_id;
}

void KdTree2D::nearest_walk(int node, int axis, const Vec2d& q, double& best_d2,
                            int& best_id) const {
  if (node == -1) return;
  const Entry& e = points_[node];
  const double d2 = (e.p - q).norm2();
  if (d2 < best_d2 || (d2 == best_d2 && e.id < best_id)) {
    best_d2 = d2;
    best_id = e.id;
  }
  const double delta = coord(q, axis) - coord(e.p, axis);
  const int near_child = delta < 0.0 ? e.left : e.right;
  const int far_child = delta < 0.0 ? e.right : e.left;
  nearest_walk(near_child, axis ^ 1, q, best_d2, best_id);
  if (delta * delta <= best_d2) nearest_walk(far_child, axis ^ 1, q, best_d2, best_id);
}

std::vector<int> KdTree2D::radius(const Vec2d& q, double r) const {
  std::vector<int> out;
  if (root_ != -1) radius_walk(root_, 0, q, r * r, out);
  std::sort(out.begin(), out.end());
  return out;
}

void KdTree2D::radius_walk(int node, int axis, const Vec2d& q, double r2,
                           std::vector<int>& out) const {
  if (node == -1) return;
  const Entry& e = points_[node];
  if ((e.p - q).norm2() <= r2) out.push_back(e.id);
  const double delta = coord(q, axis) - coord(e.p, axis);
  const int near_child = delta < 0.0 ? e.left : e.right;
  const int far_child = delta < 0.0 ? e.right : e.left;
  radius_walk(near_child, axis ^ 1, q, r2, out);
  if (delta * delta <= r2) radius_walk(far_child, axis ^ 1, q, r2, out);
}

}  // namespace rne
