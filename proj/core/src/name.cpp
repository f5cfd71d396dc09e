#include "weihrauch/name.hpp"

#include <sstream>

namespace weihrauch {

std::string word_str(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i].get_str();
  }
  os << ")";
  return os.str();
}

struct Name::Impl {
  mutable std::mutex mu;
  mutable Word memo;
  Step step;
  std::optional<uint64_t> activity;
  std::optional<uint64_t> zero_from;
};

Name::Name() : impl_(std::make_shared<Impl>()) {
  impl_->step = [](uint64_t, uint64_t) { return Nat(0); };
  impl_->activity = 0;
  impl_->zero_from = 0;
}

Name Name::from_step(Step step) {
  auto impl = std::make_shared<Impl>();
  impl->step = std::move(step);
  return Name(impl);
}

Name Name::from_fn(std::function<Nat(uint64_t)> fn) {
  return from_step([fn = std::move(fn)](uint64_t i, uint64_t) { return fn(i); });
}

Name Name::zeros() { return Name(); }

Name Name::constant(Nat c) {
  Name n = from_fn([c](uint64_t) { return c; });
  n.impl_->activity = 0;
  if (c == 0) n.impl_->zero_from = 0;
  return n;
}

Name Name::from_word(Word w) {
  auto impl = std::make_shared<Impl>();
  uint64_t len = w.size();
  impl->step = [w = std::move(w)](uint64_t i, uint64_t) -> std::optional<Nat> {
    return i < w.size() ? w[i] : Nat(0);
  };
  impl->activity = len;
  impl->zero_from = len;
  return Name(impl);
}

Name Name::from_word_then(Word w, Nat tail) {
  auto impl = std::make_shared<Impl>();
  uint64_t len = w.size();
  bool zero_tail = tail == 0;
  impl->step = [w = std::move(w), tail](uint64_t i, uint64_t) -> std::optional<Nat> {
    return i < w.size() ? w[i] : tail;
  };
  impl->activity = len;
  if (zero_tail) impl->zero_from = len;
  return Name(impl);
}

Nat Name::at(uint64_t i) const {
  // effort grows geometrically; a producer that never settles is a usage bug
  for (uint64_t e = 64; e <= (uint64_t(1) << 40); e *= 4) {
    auto v = try_at(i, e);
    if (v) return *v;
  }
  throw name_stalled(i);
}

std::optional<Nat> Name::try_at(uint64_t i, uint64_t effort) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  while (impl_->memo.size() <= i) {
    auto v = impl_->step(impl_->memo.size(), effort);
    if (!v) return std::nullopt;
    impl_->memo.push_back(std::move(*v));
  }
  return impl_->memo[i];
}

Word Name::prefix(uint64_t n) const {
  Word out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

Word Name::try_prefix(uint64_t n, uint64_t effort) const {
  Word out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    auto v = try_at(i, effort);
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

std::optional<uint64_t> Name::declared_activity() const { return impl_->activity; }
std::optional<uint64_t> Name::certainly_zero_from() const { return impl_->zero_from; }

Name Name::with_activity(uint64_t a) const {
  // sharing the memo would race; re-route through the original instead
  Name base(impl_);
  auto fresh = std::make_shared<Impl>();
  fresh->step = [base](uint64_t i, uint64_t e) { return base.try_at(i, e); };
  fresh->activity = a;
  fresh->zero_from = impl_->zero_from;
  return Name(fresh);
}

Name Name::with_zero_from(uint64_t a) const {
  Name base(impl_);
  auto fresh = std::make_shared<Impl>();
  fresh->step = [base](uint64_t i, uint64_t e) { return base.try_at(i, e); };
  fresh->activity = impl_->activity;
  fresh->zero_from = a;
  return Name(fresh);
}

Name Name::pair(const Name& p, const Name& q) {
  auto impl = std::make_shared<Impl>();
  impl->step = [p, q](uint64_t i, uint64_t e) {
    return (i % 2 == 0) ? p.try_at(i / 2, e) : q.try_at(i / 2, e);
  };
  if (p.impl_->activity && q.impl_->activity)
    impl->activity = 2 * std::max(*p.impl_->activity, *q.impl_->activity) + 2;
  if (p.impl_->zero_from && q.impl_->zero_from)
    impl->zero_from = 2 * std::max(*p.impl_->zero_from, *q.impl_->zero_from) + 2;
  return Name(impl);
}

Name Name::unpair_left(const Name& pq) {
  auto impl = std::make_shared<Impl>();
  impl->step = [pq](uint64_t i, uint64_t e) { return pq.try_at(2 * i, e); };
  if (pq.impl_->activity) impl->activity = *pq.impl_->activity / 2 + 1;
  if (pq.impl_->zero_from) impl->zero_from = *pq.impl_->zero_from / 2 + 1;
  return Name(impl);
}

Name Name::unpair_right(const Name& pq) {
  auto impl = std::make_shared<Impl>();
  impl->step = [pq](uint64_t i, uint64_t e) { return pq.try_at(2 * i + 1, e); };
  if (pq.impl_->activity) impl->activity = *pq.impl_->activity / 2 + 1;
  if (pq.impl_->zero_from) impl->zero_from = *pq.impl_->zero_from / 2 + 1;
  return Name(impl);
}

Name Name::tuple_seq(std::function<Name(uint64_t)> family) {
  struct Fam {
    std::mutex mu;
    std::vector<Name> cache;
    std::function<Name(uint64_t)> make;
    Name get(uint64_t n) {
      std::lock_guard<std::mutex> lock(mu);
      while (cache.size() <= n) cache.push_back(make(cache.size()));
      return cache[n];
    }
  };
  auto fam = std::make_shared<Fam>();
  fam->make = std::move(family);
  return from_step([fam](uint64_t i, uint64_t e) {
    auto [n, k] = cantor_unpair_u(i);
    return fam->get(n).try_at(k, e);
  });
}

Name Name::tuple_seq(std::vector<Name> head, Name rest) {
  auto impl = std::make_shared<Impl>();
  bool all_act = rest.impl_->activity.has_value();
  bool all_zero = rest.impl_->zero_from.has_value();
  uint64_t max_act = rest.impl_->activity.value_or(0);
  uint64_t max_zero = rest.impl_->zero_from.value_or(0);
  for (const Name& n : head) {
    all_act = all_act && n.impl_->activity.has_value();
    all_zero = all_zero && n.impl_->zero_from.has_value();
    if (n.impl_->activity) max_act = std::max(max_act, *n.impl_->activity);
    if (n.impl_->zero_from) max_zero = std::max(max_zero, *n.impl_->zero_from);
  }
  impl->step = [head = std::move(head), rest](uint64_t i, uint64_t e) {
    auto [n, k] = cantor_unpair_u(i);
    const Name& src = n < head.size() ? head[n] : rest;
    return src.try_at(k, e);
  };
  // position ⟨n,k⟩ with k >= bound is dummy in every component only if the
  // tail component is dummy everywhere past the bound; over-approximate by
  // leaving activity unset unless every part declares it. The bound on the
  // flattened index is quadratic in the component bound.
  if (all_act) impl->activity = cantor_pair_u(max_act + 1, max_act + 1);
  if (all_zero) impl->zero_from = cantor_pair_u(max_zero + 1, max_zero + 1);
  return Name(impl);
}

Name Name::proj(const Name& t, uint64_t i) {
  return from_step([t, i](uint64_t k, uint64_t e) {
    return t.try_at(cantor_pair_u(i, k), e);
  });
}

Name Name::prepend(Nat m, const Name& p) {
  auto impl = std::make_shared<Impl>();
  impl->step = [m, p](uint64_t i, uint64_t e) -> std::optional<Nat> {
    if (i == 0) return m;
    return p.try_at(i - 1, e);
  };
  if (p.impl_->activity) impl->activity = *p.impl_->activity + 1;
  if (p.impl_->zero_from && m == 0) impl->zero_from = *p.impl_->zero_from + 1;
  if (p.impl_->zero_from && m != 0) impl->zero_from = std::max<uint64_t>(1, *p.impl_->zero_from + 1);
  return Name(impl);
}

Name Name::drop(const Name& p, uint64_t count) {
  auto impl = std::make_shared<Impl>();
  impl->step = [p, count](uint64_t i, uint64_t e) { return p.try_at(i + count, e); };
  if (p.impl_->activity) impl->activity = *p.impl_->activity;
  if (p.impl_->zero_from) impl->zero_from = *p.impl_->zero_from;
  return Name(impl);
}

Name Name::minus_one(const Name& p) {
  // scan forward for the next non-zero symbol; effort bounds the scan
  struct St {
    uint64_t scanned = 0;
  };
  auto st = std::make_shared<St>();
  return from_step([p, st](uint64_t, uint64_t effort) -> std::optional<Nat> {
    while (st->scanned < effort) {
      auto v = p.try_at(st->scanned, effort);
      if (!v) return std::nullopt;
      ++st->scanned;
      if (*v != 0) return *v - 1;
    }
    return std::nullopt;
  });
}

Name Name::completed(const Name& p) {
  auto impl = std::make_shared<Impl>();
  impl->step = [p](uint64_t i, uint64_t e) -> std::optional<Nat> {
    auto v = p.try_at(i, e);
    if (!v) return std::nullopt;
    return *v + 1;
  };
  if (p.impl_->activity) impl->activity = *p.impl_->activity;
  return Name(impl);
}

Name stream_apply(WordFn f, const Name& in) {
  struct St {
    uint64_t depth = 0;
    bool evaluated = false;
    size_t last_len = 0;
    Word out;
  };
  auto st = std::make_shared<St>();
  return Name::from_step([f = std::move(f), in, st](uint64_t i, uint64_t effort) -> std::optional<Nat> {
    for (;;) {
      Word w = in.try_prefix(st->depth, effort);
      if (!st->evaluated || w.size() > st->last_len) {
        Word next = f(w);
        if (!is_prefix(st->out, next))
          throw std::logic_error("stream_apply: word function is not monotone");
        st->out = std::move(next);
        st->last_len = w.size();
        st->evaluated = true;
      }
      if (st->out.size() > i) return st->out[i];
      if (w.size() < st->depth) return std::nullopt;  // input stalled at this effort
      if (st->depth >= effort) return std::nullopt;
      ++st->depth;
    }
  });
}

bool word_fn_monotone_on(const WordFn& f, const Word& w) {
  Word prev;
  for (size_t n = 0; n <= w.size(); ++n) {
    Word pre(w.begin(), w.begin() + n);
    Word cur = f(pre);
    if (!is_prefix(prev, cur)) return false;
    prev = std::move(cur);
  }
  return true;
}

}  // namespace weihrauch
