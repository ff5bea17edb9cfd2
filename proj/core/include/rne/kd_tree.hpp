#pragma once

#include <vector>

#include "rne/geom.hpp"

namespace rne {

// Incremental 2D k-d tree over node positions (planar queries; the graph is
// built by a ground robot). Ties on distance resolve to the smaller id so
// queries are reproducible and match the linear-scan oracle bit for bit.
// The tree rebuilds itself once insertions double its size, keeping it
// balanced without rewiring.
class KdTree2D {
 public:
  void insert(const Vec2d& p, int id);

  /// Id of the nearest point, -1 when empty.
  int nearest(const Vec2d& q) const;

  /// Ids of all points within `r` (inclusive), ascending.
  std::vector<int> radius(const Vec2d& q, double r) const;

  std::size_t size() const { return points_.size(); }

 private:
  struct Entry {
    Vec2d p;
    int id;
    int left = -1;
    int right = -1;
  };

  void rebuild();
  int build_range(std::vector<int>& order, int lo, int hi, int axis);
  void nearest_walk(int node, int axis, const Vec2d& q, double& best_d2,
                    int& best_id) const;
  void radius_walk(int node, int axis, const Vec2d& q, double r2,
                   std::vector<int>& out) const;

  std::vector<Entry> points_;
  int root_ = -1;
  std::size_t rebuild_at_ = 8;
};

}  // namespace rne
