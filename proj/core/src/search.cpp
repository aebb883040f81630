#include "sdist/search.hpp"

#include <map>
#include <stdexcept>

namespace sdist {

namespace {

class Searcher {
 public:
  Searcher(const PointSet& candidates, std::size_t s, std::size_t cap)
      : m_(candidates.size()), s_(s), cap_(cap), distance_id_(m_ * m_) {
    std::map<Rational, std::size_t> ids;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        const auto [it, inserted] =
            ids.try_emplace(squared_distance(candidates[i], candidates[j]), ids.size());
        distance_id_[i * m_ + j] = distance_id_[j * m_ + i] = it->second;
      }
    }
    multiplicity_.assign(ids.size(), 0);
  }

  SearchResult run() {
    extend(0);
    return best_;
  }

 private:
  bool done() const { return cap_ != 0 && best_.max_size >= cap_; }

  void extend(std::size_t next) {
    if (chosen_.size() > best_.max_size) {
      best_.max_size = chosen_.size();
      best_.witness = chosen_;
    }
    for (std::size_t c = next; c < m_ && !done(); ++c) {
      if (chosen_.size() + (m_ - c) <= best_.max_size) return;
      if (add(c)) {
        chosen_.push_back(c);
        extend(c + 1);
        chosen_.pop_back();
      }
      remove(c);
    }
  }

  // Records the distances from c to the chosen points; false when that
  // pushes the distinct count above s. Always undone with remove(c).
  bool add(std::size_t c) {
    for (std::size_t other : chosen_) {
      if (multiplicity_[distance_id_[c * m_ + other]]++ == 0) ++distinct_;
    }
    return distinct_ <= s_;
  }

  void remove(std::size_t c) {
    for (std::size_t other : chosen_) {
      if (--multiplicity_[distance_id_[c * m_ + other]] == 0) --distinct_;
    }
  }

  std::size_t m_;
  std::size_t s_;
  std::size_t cap_;
  std::vector<std::size_t> distance_id_;
  std::vector<std::size_t> multiplicity_;
  std::size_t distinct_ = 0;
  std::vector<std::size_t> chosen_;
  SearchResult best_;
};

}  // namespace

SearchResult brute_force_max_sdist(const PointSet& candidates, std::size_t s, std::size_t size_cap) {
  if (candidates.size() > kSearchGuard && size_cap == 0) {
    throw std::invalid_argument("brute-force search is limited to " + std::to_string(kSearchGuard) +
                                " candidates without a size cap, got " +
                                std::to_string(candidates.size()));
  }
  return Searcher(candidates, s, size_cap).run();
}

}  // namespace sdist
