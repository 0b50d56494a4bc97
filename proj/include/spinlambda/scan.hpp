#pragma once

// Window scans: enumerate admissible highest weights in a box of lattice
// coordinates, classify each one, group the painted ones by chamber, and
// emit the results as CSV, JSON, ASCII art, or SVG. Classification may
// fan out across threads; records are merged in lexicographic coordinate
// order so output bytes never depend on the parallelism degree.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "context.hpp"
#include "errors.hpp"
#include "norms.hpp"

namespace spinlambda {

struct WindowSpec {
  std::vector<std::pair<long, long>> bounds;  // inclusive, one per lattice coordinate
  bool require_k_dominant = true;             // always true for classification runs
  std::size_t max_points = 1'000'000;
};

struct LatticePoint {
  std::vector<long> coords;
  Weight mu;
};

struct KTypeRecord {
  std::vector<long> coords;
  Weight mu;
  Rat lambda_sq, intermediate_sq, spin_sq;
  bool painted = false;
  bool cond_a = false, cond_b = false;
  bool boundary = false;  // mu + 2 rho_c lies on a g-wall
  std::size_t chamber = 0;  // index into the transversal of the first chamber containing mu + 2 rho_c
};

struct PartitionReport {
  std::vector<long> painted_per_chamber;
  long unpainted = 0;

  long nonempty_chambers() const {
    long n = 0;
    for (long c : painted_per_chamber)
      if (c > 0) ++n;
    return n;
  }
};

/// All lattice points in the box satisfying the congruences (and compact
/// dominance unless disabled), in lexicographic coordinate order.
inline std::vector<LatticePoint> enumerate_window(const Context& ctx, const WindowSpec& win) {
  const std::size_t rank = ctx.datum.lattice.rank();
  if (win.bounds.size() != rank)
    throw std::invalid_argument("window arity " + std::to_string(win.bounds.size()) +
                                " does not match lattice rank " + std::to_string(rank));
  mpz_class volume = 1;
  for (const auto& [lo, hi] : win.bounds) {
    if (lo > hi) throw std::invalid_argument("window bound with lower > upper");
    volume *= mpz_class(hi) - mpz_class(lo) + 1;
  }
  if (volume > static_cast<unsigned long>(win.max_points))
    throw CapError("window holds " + volume.get_str() + " points, more than the cap " +
                   std::to_string(win.max_points));

  std::vector<LatticePoint> out;
  if (rank == 0) return out;
  std::vector<long> coords;
  coords.reserve(rank);
  for (const auto& [lo, hi] : win.bounds) coords.push_back(lo);
  for (;;) {
    if (ctx.satisfies_congruences(coords)) {
      Weight mu = ctx.weight_from_lattice(coords);
      if (!win.require_k_dominant || ctx.is_k_dominant(mu))
        out.push_back(LatticePoint{coords, std::move(mu)});
    }
    // odometer: last coordinate fastest keeps lexicographic order
    std::size_t pos = rank;
    while (pos > 0) {
      --pos;
      if (coords[pos] < win.bounds[pos].second) {
        ++coords[pos];
        break;
      }
      coords[pos] = win.bounds[pos].first;
      if (pos == 0) return out;
    }
  }
}

namespace detail {

inline KTypeRecord classify_point(const Context& ctx, const LatticePoint& p) {
  NormReport rep = norm_report(ctx, p.mu);
  KTypeRecord rec;
  rec.coords = p.coords;
  rec.mu = p.mu;
  rec.lambda_sq = rep.lambda_sq;
  rec.intermediate_sq = rep.intermediate_sq;
  rec.spin_sq = rep.spin_sq;
  rec.cond_a = rep.verdict.cond_a;
  rec.cond_b = rep.verdict.cond_b;
  rec.painted = !rep.verdict.strict;
  rec.boundary = rep.verdict.cond_a;

  const Weight shifted = p.mu + ctx.rho_c + ctx.rho_c;
  bool found = false;
  for (std::size_t i = 0; i < ctx.w1.size(); ++i)
    if (ctx.is_g_dominant(ctx.w1[i].apply_inv(shifted))) {
      rec.chamber = i;
      found = true;
      break;
    }
  if (!found)
    throw ConsistencyError("no transversal chamber contains " + to_string(shifted));
  return rec;
}

}  // namespace detail

/// One record per enumerated weight, in lexicographic coordinate order.
inline std::vector<KTypeRecord> classify(const Context& ctx, const WindowSpec& win,
                                         unsigned jobs = 1) {
  const std::vector<LatticePoint> points = enumerate_window(ctx, win);
  std::vector<KTypeRecord> records(points.size());
  if (jobs <= 1 || points.size() < 2) {
    for (std::size_t i = 0; i < points.size(); ++i)
      records[i] = detail::classify_point(ctx, points[i]);
    return records;
  }

  const unsigned nthreads = std::min<unsigned>(jobs, static_cast<unsigned>(points.size()));
  std::vector<std::thread> workers;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < nthreads; ++t) {
    workers.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < points.size(); i += nthreads)
          records[i] = detail::classify_point(ctx, points[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (first_error) std::rethrow_exception(first_error);
  return records;
}

/// Painted counts per transversal chamber plus the unpainted total.
/// Painted records never sit on chamber walls, so the assignment is
/// unambiguous.
inline PartitionReport partition_report(const Context& ctx,
                                        const std::vector<KTypeRecord>& records) {
  PartitionReport rep;
  rep.painted_per_chamber.assign(ctx.w1.size(), 0);
  for (const KTypeRecord& r : records) {
    if (r.painted)
      ++rep.painted_per_chamber.at(r.chamber);
    else
      ++rep.unpainted;
  }
  return rep;
}

enum class EmitFormat { csv, json, ascii, svg };

inline EmitFormat emit_format_from_string(const std::string& s) {
  if (s == "csv") return EmitFormat::csv;
  if (s == "json") return EmitFormat::json;
  if (s == "ascii") return EmitFormat::ascii;
  if (s == "svg") return EmitFormat::svg;
  throw std::invalid_argument("unknown format: " + s + " (expected csv|json|ascii|svg)");
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline nlohmann::ordered_json rat_to_json(const Rat& q) {
  if (is_integer(q) && q.get_num().fits_slong_p())
    return nlohmann::ordered_json(q.get_num().get_si());
  return nlohmann::ordered_json(to_string(q));
}

inline void emit_csv(const Context& ctx, const std::vector<KTypeRecord>& records,
                     const PartitionReport& part, std::ostream& os) {
  const std::size_t rank = ctx.datum.lattice.rank();
  for (std::size_t i = 0; i < rank; ++i) os << "c" << i << ",";
  os << "lambda_sq,intermediate_sq,spin_sq,painted,cond_a,cond_b,chamber\n";
  for (const KTypeRecord& r : records) {
    for (long c : r.coords) os << c << ",";
    os << to_string(r.lambda_sq) << "," << to_string(r.intermediate_sq) << ","
       << to_string(r.spin_sq) << "," << (r.painted ? "true" : "false") << ","
       << (r.cond_a ? "true" : "false") << "," << (r.cond_b ? "true" : "false") << ","
       << r.chamber << "\n";
  }
  os << "\nchamber,word,painted_count\n";
  for (std::size_t i = 0; i < part.painted_per_chamber.size(); ++i)
    os << i << "," << csv_field(word_string(ctx.w1[i])) << ","
       << part.painted_per_chamber[i] << "\n";
  os << "unpainted,," << part.unpainted << "\n";
}

inline void emit_json(const Context& ctx, const std::vector<KTypeRecord>& records,
                      const PartitionReport& part, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["datum"] = ctx.datum.name;
  auto& recs = doc["records"] = nlohmann::ordered_json::array();
  for (const KTypeRecord& r : records) {
    nlohmann::ordered_json jr;
    jr["coords"] = r.coords;
    auto mu = nlohmann::ordered_json::array();
    for (const Rat& x : r.mu.c) mu.push_back(rat_to_json(x));
    jr["mu"] = std::move(mu);
    jr["lambda_sq"] = rat_to_json(r.lambda_sq);
    jr["intermediate_sq"] = rat_to_json(r.intermediate_sq);
    jr["spin_sq"] = rat_to_json(r.spin_sq);
    jr["painted"] = r.painted;
    jr["cond_a"] = r.cond_a;
    jr["cond_b"] = r.cond_b;
    jr["boundary"] = r.boundary;
    jr["chamber"] = r.chamber;
    recs.push_back(std::move(jr));
  }
  nlohmann::ordered_json summary;
  summary["painted_per_chamber"] = part.painted_per_chamber;
  summary["unpainted"] = part.unpainted;
  auto words = nlohmann::ordered_json::array();
  for (const WeylElement& w : ctx.w1) words.push_back(word_string(w));
  summary["w1_words"] = std::move(words);
  doc["summary"] = std::move(summary);
  os << doc.dump(2) << "\n";
}

struct PlotBounds {
  long lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
  bool two_dim = false;
};

inline PlotBounds plot_bounds(const Context& ctx, const std::vector<KTypeRecord>& records) {
  const std::size_t rank = ctx.datum.lattice.rank();
  if (rank < 1 || rank > 2)
    throw std::invalid_argument("ascii/svg output requires a lattice of rank 1 or 2");
  PlotBounds b;
  b.two_dim = rank == 2;
  bool first = true;
  for (const KTypeRecord& r : records) {
    const long c0 = r.coords[0];
    const long c1 = b.two_dim ? r.coords[1] : 0;
    if (first) {
      b.lo0 = b.hi0 = c0;
      b.lo1 = b.hi1 = c1;
      first = false;
    } else {
      b.lo0 = std::min(b.lo0, c0);
      b.hi0 = std::max(b.hi0, c0);
      b.lo1 = std::min(b.lo1, c1);
      b.hi1 = std::max(b.hi1, c1);
    }
  }
  return b;
}

inline void emit_ascii(const Context& ctx, const std::vector<KTypeRecord>& records,
                       const PartitionReport& part, std::ostream& os) {
  const PlotBounds b = plot_bounds(ctx, records);
  if (!records.empty()) {
    const std::size_t ncols = static_cast<std::size_t>(b.hi0 - b.lo0 + 1);
    std::string label_hi = std::to_string(b.hi1), label_lo = std::to_string(b.lo1);
    const std::size_t lw = b.two_dim ? std::max(label_hi.size(), label_lo.size()) : 0;

    for (long row = b.hi1; row >= b.lo1; --row) {
      std::string line(ncols, ' ');
      for (const KTypeRecord& r : records) {
        const long c1 = b.two_dim ? r.coords[1] : 0;
        if (c1 != row) continue;
        line[static_cast<std::size_t>(r.coords[0] - b.lo0)] = r.painted ? '*' : 'o';
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      if (b.two_dim) {
        std::string label = std::to_string(row);
        os << std::string(lw - label.size(), ' ') << label << " |";
      }
      os << line << "\n";
    }
    if (b.two_dim) os << std::string(lw, ' ') << " +" << std::string(ncols, '-') << "\n";
    os << (b.two_dim ? std::string(lw + 2, ' ') : std::string{}) << "c0: " << b.lo0
       << ".." << b.hi0 << (b.two_dim ? " (rows: c1)" : "") << "\n";
  }
  os << "painted per chamber:";
  for (std::size_t i = 0; i < part.painted_per_chamber.size(); ++i)
    os << " " << part.painted_per_chamber[i];
  os << "\nunpainted: " << part.unpainted << "\n";
}

inline void emit_svg(const Context& ctx, const std::vector<KTypeRecord>& records,
                     const PartitionReport& part, std::ostream& os) {
  const PlotBounds b = plot_bounds(ctx, records);
  constexpr long kStep = 20, kMargin = 30, kRadius = 6;
  const long width = 2 * kMargin + (records.empty() ? 0 : (b.hi0 - b.lo0) * kStep);
  const long height = 2 * kMargin + (records.empty() ? 0 : (b.hi1 - b.lo1) * kStep);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  for (const KTypeRecord& r : records) {
    const long c0 = r.coords[0];
    const long c1 = b.two_dim ? r.coords[1] : 0;
    const long cx = kMargin + (c0 - b.lo0) * kStep;
    const long cy = kMargin + (b.hi1 - c1) * kStep;
    os << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kRadius << "\" ";
    if (r.painted)
      os << "fill=\"#000\"/>\n";
    else
      os << "fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
  }
  if (!records.empty()) {
    os << "  <text x=\"" << kMargin << "\" y=\"" << height - 8
       << "\" font-size=\"10\" text-anchor=\"middle\">" << "(" << b.lo0
       << (b.two_dim ? "," + std::to_string(b.lo1) : "") << ")</text>\n";
    os << "  <text x=\"" << width - kMargin << "\" y=\"12\" font-size=\"10\" "
       << "text-anchor=\"middle\">(" << b.hi0
       << (b.two_dim ? "," + std::to_string(b.hi1) : "") << ")</text>\n";
  }
  os << "  <!-- painted per chamber:";
  for (long c : part.painted_per_chamber) os << " " << c;
  os << "; unpainted: " << part.unpainted << " -->\n</svg>\n";
}

}  // namespace detail

/// Serializes records plus the partition summary. CSV and JSON carry the
/// summary as a separate trailing section/object; ASCII and SVG append a
/// footer. ASCII/SVG require a lattice of rank 1 or 2.
inline void emit(const Context& ctx, const std::vector<KTypeRecord>& records,
                 const PartitionReport& part, EmitFormat format, std::ostream& os) {
  switch (format) {
    case EmitFormat::csv: detail::emit_csv(ctx, records, part, os); return;
    case EmitFormat::json: detail::emit_json(ctx, records, part, os); return;
    case EmitFormat::ascii: detail::emit_ascii(ctx, records, part, os); return;
    case EmitFormat::svg: detail::emit_svg(ctx, records, part, os); return;
  }
  throw std::invalid_argument("unknown emit format");
}

inline std::string emit_string(const Context& ctx, const std::vector<KTypeRecord>& records,
                               const PartitionReport& part, EmitFormat format) {
  std::ostringstream os;
  emit(ctx, records, part, format, os);
  return os.str();
}

}  // namespace spinlambda
