/* qromopt: database reordering for compact QROM circuits
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file experiments.hpp
  \brief Experiment harness: instance batches, reports, and CSV/JSON export

  Instance seeds derive from a single master seed by counter
  (seed_i = master + i), so every experiment is reproducible from one
  integer.  Instances may run on parallel workers; artifacts are written
  by the calling thread in instance order, so outputs are byte-identical
  regardless of thread count.
*/

#pragma once

#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "circuit.hpp"
#include "cost.hpp"
#include "database.hpp"
#include "esop.hpp"
#include "search.hpp"

namespace qromopt
{

struct experiment_spec
{
  uint32_t address_bits{ 3 };
  uint32_t data_bits{ 6 };
  uint32_t instance_count{ 15 };
  uint64_t master_seed{ 0 };
  int64_t budget{ 1000 };
  std::vector<uint32_t> address_bits_list{ 4, 5, 6, 7 }; /* rq4 sweep */
  unsigned threads{ 1 };                                 /* 0 = hardware concurrency */
  std::filesystem::path out_dir;
};

inline void validate( experiment_spec const& spec )
{
  if ( spec.instance_count < 1 )
    throw std::invalid_argument( "instance_count must be >= 1" );
  if ( spec.budget < 0 )
    throw std::invalid_argument( "budget must be >= 0" );
  if ( spec.out_dir.empty() )
    throw std::invalid_argument( "output directory must be set" );
}

struct method_outcome
{
  int64_t best{ 0 };
  double ratio_vs_baseline{ 1.0 };
  int64_t t_count{ 0 };
};

/*! \brief Per-instance results: pre-minimization size, identity baseline, method bests, optional exhaustive statistics. */
struct instance_report
{
  uint64_t seed{ 0 };
  uint32_t num_address_bits{ 0 };
  uint32_t num_data_bits{ 0 };
  int64_t org{ 0 };      /* minterm-cover literal total of the identity ordering */
  int64_t baseline{ 0 }; /* proxy of the identity ordering after minimization */
  int64_t t_count_baseline{ 0 };
  std::map<std::string, method_outcome> methods;
  std::optional<score_stats> exhaustive;
};

inline void to_json( nlohmann::json& j, instance_report const& report )
{
  j = nlohmann::json{ { "seed", report.seed },
                      { "n", report.num_address_bits },
                      { "d", report.num_data_bits },
                      { "org", report.org },
                      { "baseline", report.baseline },
                      { "t_count_baseline", report.t_count_baseline } };
  nlohmann::json methods = nlohmann::json::object();
  for ( auto const& [name, outcome] : report.methods )
  {
    methods[name] = { { "best", outcome.best },
                      { "ratio_vs_baseline", outcome.ratio_vs_baseline },
                      { "t_count", outcome.t_count } };
  }
  j["methods"] = methods;
  if ( report.exhaustive )
  {
    auto const& s = *report.exhaustive;
    j["exhaustive"] = { { "min", s.min_score },
                        { "max", s.max_score },
                        { "avg", s.avg_score },
                        { "max_min_ratio", double( s.max_score ) / double( s.min_score ) },
                        { "min_avg_ratio", double( s.min_score ) / s.avg_score } };
  }
}

namespace detail
{

inline void parallel_for_index( std::size_t count, unsigned threads,
                                std::function<void( std::size_t )> const& body )
{
  if ( threads == 0 )
    threads = std::max( 1u, std::thread::hardware_concurrency() );
  if ( threads <= 1 || count <= 1 )
  {
    for ( std::size_t i = 0; i < count; ++i )
      body( i );
    return;
  }
  std::atomic<std::size_t> next{ 0 };
  std::vector<std::exception_ptr> errors( count );
  std::vector<std::thread> pool;
  unsigned const workers = static_cast<unsigned>( std::min<std::size_t>( threads, count ) );
  for ( unsigned t = 0; t < workers; ++t )
  {
    pool.emplace_back( [&]() {
      for ( std::size_t i = next.fetch_add( 1 ); i < count; i = next.fetch_add( 1 ) )
      {
        try
        {
          body( i );
        }
        catch ( ... )
        {
          errors[i] = std::current_exception();
        }
      }
    } );
  }
  for ( auto& th : pool )
    th.join();
  for ( auto const& e : errors )
  {
    if ( e )
      std::rethrow_exception( e );
  }
}

/* Linearly interpolated quantile of an unsorted sample. */
inline double quantile( std::vector<double> values, double p )
{
  if ( values.empty() )
    throw std::invalid_argument( "quantile of empty sample" );
  std::sort( values.begin(), values.end() );
  double const h = p * double( values.size() - 1 );
  std::size_t const lo = static_cast<std::size_t>( h );
  if ( lo + 1 >= values.size() )
    return values.back();
  double const frac = h - double( lo );
  return values[lo] + frac * ( values[lo + 1] - values[lo] );
}

inline double median( std::vector<double> values )
{
  return quantile( std::move( values ), 0.5 );
}

inline std::string format_double( double v )
{
  char buffer[64];
  auto const [ptr, ec] = std::to_chars( buffer, buffer + sizeof buffer, v );
  (void)ec;
  return std::string( buffer, ptr );
}

inline void write_text_file( std::filesystem::path const& path, std::string const& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw std::runtime_error( "cannot open file for writing: " + path.string() );
  out << content;
}

inline void write_json_file( std::filesystem::path const& path, nlohmann::json const& j )
{
  write_text_file( path, j.dump( 2 ) + "\n" );
}

inline std::string trace_csv( std::vector<trace_point> const& trace )
{
  std::string csv = "step,best_score\n";
  for ( auto const& pt : trace )
    csv += std::to_string( pt.step ) + "," + std::to_string( pt.best_score ) + "\n";
  return csv;
}

/* Literal total of the minterm covers, i.e. the size before minimization. */
inline int64_t org_score( database const& db )
{
  int64_t total = 0;
  for ( auto const& tt : extract_truth_tables( db ) )
    total += int64_t( tt.count_ones() ) * db.num_address_bits;
  return total;
}

inline method_outcome make_outcome( database const& db, search_result const& res, int64_t baseline )
{
  auto const covers = minimize_database( reorder( db, res.best_perm ) );
  auto const report = make_cost_report( covers, db.num_address_bits );
  return { res.best_score, double( res.best_score ) / double( baseline ), report.t_count };
}

} /* namespace detail */

/*! \brief Runs one search on a database and writes all artifacts.
 *
 * Outputs in `out_dir`: report.json, permutation.txt (line i holds
 * pi(i)), circuit.qasm, circuit.json, trace.csv.  The emitted circuit
 * is verified against the reordered database before anything is
 * written.
 */
inline instance_report run_search_command( database const& db, search_config const& cfg,
                                           std::filesystem::path const& out_dir,
                                           bool force = false, uint64_t instance_seed = 0 )
{
  validate( db );
  std::filesystem::create_directories( out_dir );

  score_stats stats{};
  search_result const res = run_search( db, cfg, &stats, force );

  auto const baseline_covers = minimize_database( db );
  int64_t const baseline = proxy_score( baseline_covers );
  auto const baseline_cost = make_cost_report( baseline_covers, db.num_address_bits );

  database const best_db = reorder( db, res.best_perm );
  auto const best_covers = minimize_database( best_db );
  auto const best_cost = make_cost_report( best_covers, db.num_address_bits );
  circuit const circ = emit_circuit( best_covers );

  if ( auto const check = verify( circ, best_db ); !check )
    throw std::runtime_error( "internal error: emitted circuit fails verification at address " +
                              std::to_string( check.address ) );

  instance_report report;
  report.seed = instance_seed;
  report.num_address_bits = db.num_address_bits;
  report.num_data_bits = db.num_data_bits;
  report.org = detail::org_score( db );
  report.baseline = baseline;
  report.t_count_baseline = baseline_cost.t_count;
  report.methods[to_string( cfg.method )] =
      { res.best_score, double( res.best_score ) / double( baseline ), best_cost.t_count };
  if ( cfg.method == search_method::exhaustive )
    report.exhaustive = stats;

  nlohmann::json j = report;
  j["method"] = to_string( cfg.method );
  j["budget"] = cfg.budget;
  j["search_seed"] = cfg.seed;
  j["evaluations"] = res.evaluations;
  j["best_cost"] = best_cost;
  detail::write_json_file( out_dir / "report.json", j );

  std::ostringstream perm_text;
  write_permutation( res.best_perm, perm_text );
  detail::write_text_file( out_dir / "permutation.txt", perm_text.str() );

  detail::write_text_file( out_dir / "circuit.qasm", to_qasm( circ ) );
  detail::write_json_file( out_dir / "circuit.json", nlohmann::json( circ ) );
  detail::write_text_file( out_dir / "trace.csv", detail::trace_csv( res.trace ) );
  return report;
}

/* ------------------------------------------------------------------ */
/* Experiment batches                                                  */
/* ------------------------------------------------------------------ */

struct rq1_summary
{
  double median_max_min_ratio{ 0.0 };
  double q1_max_min_ratio{ 0.0 };
  double q3_max_min_ratio{ 0.0 };
  double median_min_avg_ratio{ 0.0 };
  uint32_t anneal_within_10_percent{ 0 }; /* instances with best <= 1.1 * exhaustive min */
  uint32_t anneal_matched_min{ 0 };
  bool anneal_never_below_min{ true };
  std::vector<instance_report> instances;
};

/*! \brief Ordering spread on small instances: exhaustive statistics plus an annealing run per instance. */
inline rq1_summary run_rq1( experiment_spec const& spec, bool force = false )
{
  validate( spec );
  std::filesystem::create_directories( spec.out_dir );

  rq1_summary summary;
  summary.instances.resize( spec.instance_count );

  detail::parallel_for_index( spec.instance_count, spec.threads, [&]( std::size_t i ) {
    uint64_t const seed = spec.master_seed + i;
    database const db = random_instance( spec.address_bits, spec.data_bits, seed );

    score_stats stats{};
    search_result const exhaustive_res = exhaustive_search( db, &stats, force );

    search_config cfg;
    cfg.budget = spec.budget;
    cfg.seed = seed;
    cfg.method = search_method::anneal;
    search_result const anneal_res = anneal( db, cfg );

    auto const baseline_covers = minimize_database( db );

    instance_report report;
    report.seed = seed;
    report.num_address_bits = db.num_address_bits;
    report.num_data_bits = db.num_data_bits;
    report.org = detail::org_score( db );
    report.baseline = proxy_score( baseline_covers );
    report.t_count_baseline = make_cost_report( baseline_covers, db.num_address_bits ).t_count;
    report.exhaustive = stats;
    report.methods["exhaustive"] = detail::make_outcome( db, exhaustive_res, report.baseline );
    report.methods["anneal"] = detail::make_outcome( db, anneal_res, report.baseline );
    summary.instances[i] = std::move( report );
  } );

  std::vector<double> max_min, min_avg;
  for ( auto const& report : summary.instances )
  {
    auto const& s = *report.exhaustive;
    max_min.push_back( double( s.max_score ) / double( s.min_score ) );
    min_avg.push_back( double( s.min_score ) / s.avg_score );
    int64_t const best = report.methods.at( "anneal" ).best;
    if ( best < s.min_score )
      summary.anneal_never_below_min = false;
    if ( double( best ) <= 1.1 * double( s.min_score ) )
      ++summary.anneal_within_10_percent;
    if ( best == s.min_score )
      ++summary.anneal_matched_min;
  }
  summary.median_max_min_ratio = detail::median( max_min );
  summary.q1_max_min_ratio = detail::quantile( max_min, 0.25 );
  summary.q3_max_min_ratio = detail::quantile( max_min, 0.75 );
  summary.median_min_avg_ratio = detail::median( min_avg );

  detail::write_json_file( spec.out_dir / "rq1_instances.json", nlohmann::json( summary.instances ) );
  detail::write_json_file(
      spec.out_dir / "rq1_summary.json",
      { { "instances", spec.instance_count },
        { "n", spec.address_bits },
        { "d", spec.data_bits },
        { "master_seed", spec.master_seed },
        { "budget", spec.budget },
        { "max_min_ratio", { { "median", summary.median_max_min_ratio },
                             { "q1", summary.q1_max_min_ratio },
                             { "q3", summary.q3_max_min_ratio } } },
        { "min_avg_ratio", { { "median", summary.median_min_avg_ratio } } },
        { "anneal", { { "within_10_percent_of_min", summary.anneal_within_10_percent },
                      { "matched_min", summary.anneal_matched_min },
                      { "never_below_min", summary.anneal_never_below_min } } } } );
  return summary;
}

struct rq3_summary
{
  double spearman{ 0.0 };
  std::vector<double> proxy_ratios;
  std::vector<double> t_count_ratios;
  std::vector<instance_report> instances;
};

/*! \brief Correlation between the proxy ratio and the T-count-estimate ratio across instances.
 *
 * T-counts come from the 8k-12 per-MCX formula estimate, not from a
 * compiled circuit; the summary records that explicitly.
 */
inline rq3_summary run_rq3( experiment_spec const& spec )
{
  validate( spec );
  if ( spec.instance_count < 2 )
    throw std::invalid_argument( "rq3 needs at least 2 instances" );
  std::filesystem::create_directories( spec.out_dir );

  rq3_summary summary;
  summary.instances.resize( spec.instance_count );

  detail::parallel_for_index( spec.instance_count, spec.threads, [&]( std::size_t i ) {
    uint64_t const seed = spec.master_seed + i;
    database const db = random_instance( spec.address_bits, spec.data_bits, seed );

    search_config cfg;
    cfg.budget = spec.budget;
    cfg.seed = seed;
    cfg.method = search_method::anneal;
    search_result const res = anneal( db, cfg );

    auto const baseline_covers = minimize_database( db );

    instance_report report;
    report.seed = seed;
    report.num_address_bits = db.num_address_bits;
    report.num_data_bits = db.num_data_bits;
    report.org = detail::org_score( db );
    report.baseline = proxy_score( baseline_covers );
    report.t_count_baseline = make_cost_report( baseline_covers, db.num_address_bits ).t_count;
    report.methods["anneal"] = detail::make_outcome( db, res, report.baseline );
    summary.instances[i] = std::move( report );
  } );

  for ( auto const& report : summary.instances )
  {
    auto const& outcome = report.methods.at( "anneal" );
    summary.proxy_ratios.push_back( outcome.ratio_vs_baseline );
    summary.t_count_ratios.push_back( double( outcome.t_count ) / double( report.t_count_baseline ) );
  }
  summary.spearman = spearman_rho( summary.proxy_ratios, summary.t_count_ratios );

  std::string csv = "instance,seed,proxy_ratio,t_count_ratio\n";
  for ( std::size_t i = 0; i < summary.instances.size(); ++i )
  {
    csv += std::to_string( i ) + "," + std::to_string( summary.instances[i].seed ) + "," +
           detail::format_double( summary.proxy_ratios[i] ) + "," +
           detail::format_double( summary.t_count_ratios[i] ) + "\n";
  }
  detail::write_text_file( spec.out_dir / "rq3_scatter.csv", csv );
  detail::write_json_file( spec.out_dir / "rq3_instances.json", nlohmann::json( summary.instances ) );
  detail::write_json_file(
      spec.out_dir / "rq3_summary.json",
      { { "instances", spec.instance_count },
        { "n", spec.address_bits },
        { "d", spec.data_bits },
        { "master_seed", spec.master_seed },
        { "budget", spec.budget },
        { "spearman_rho", summary.spearman },
        { "t_count_source", "8k-12 formula estimate per MCX gate, no compilation" } } );
  return summary;
}

struct rq4_row
{
  uint32_t address_bits{ 0 };
  double median_anneal{ 0.0 };
  double q1_anneal{ 0.0 };
  double q3_anneal{ 0.0 };
  double median_random{ 0.0 };
  double q1_random{ 0.0 };
  double q3_random{ 0.0 };
};

/*! \brief Anneal vs Random-K best/baseline ratios over a size sweep; equal budgets per method. */
inline std::vector<rq4_row> run_rq4( experiment_spec const& spec )
{
  validate( spec );
  std::filesystem::create_directories( spec.out_dir );

  struct cell
  {
    double anneal_ratio;
    double random_ratio;
  };
  std::size_t const per_n = spec.instance_count;
  std::size_t const total = spec.address_bits_list.size() * per_n;
  std::vector<cell> cells( total );

  detail::parallel_for_index( total, spec.threads, [&]( std::size_t task ) {
    uint32_t const n = spec.address_bits_list[task / per_n];
    std::size_t const i = task % per_n;
    uint64_t const seed = spec.master_seed + i;
    database const db = random_instance( n, spec.data_bits, seed );

    search_config cfg;
    cfg.budget = spec.budget;
    cfg.seed = seed;
    cfg.method = search_method::anneal;
    search_result const anneal_res = anneal( db, cfg );

    cfg.method = search_method::random;
    search_result const random_res = random_k( db, cfg );

    double const baseline = double( anneal_res.trace.front().best_score );
    cells[task] = { double( anneal_res.best_score ) / baseline,
                    double( random_res.best_score ) / baseline };
  } );

  std::vector<rq4_row> rows;
  std::string csv = "n,num_addresses,median_anneal_ratio,q1_anneal_ratio,q3_anneal_ratio,"
                    "median_random_ratio,q1_random_ratio,q3_random_ratio\n";
  for ( std::size_t ni = 0; ni < spec.address_bits_list.size(); ++ni )
  {
    std::vector<double> anneal_ratios, random_ratios;
    for ( std::size_t i = 0; i < per_n; ++i )
    {
      anneal_ratios.push_back( cells[ni * per_n + i].anneal_ratio );
      random_ratios.push_back( cells[ni * per_n + i].random_ratio );
    }
    rq4_row row;
    row.address_bits = spec.address_bits_list[ni];
    row.median_anneal = detail::median( anneal_ratios );
    row.q1_anneal = detail::quantile( anneal_ratios, 0.25 );
    row.q3_anneal = detail::quantile( anneal_ratios, 0.75 );
    row.median_random = detail::median( random_ratios );
    row.q1_random = detail::quantile( random_ratios, 0.25 );
    row.q3_random = detail::quantile( random_ratios, 0.75 );
    rows.push_back( row );

    csv += std::to_string( row.address_bits ) + "," +
           std::to_string( uint64_t( 1 ) << row.address_bits ) + "," +
           detail::format_double( row.median_anneal ) + "," + detail::format_double( row.q1_anneal ) +
           "," + detail::format_double( row.q3_anneal ) + "," +
           detail::format_double( row.median_random ) + "," + detail::format_double( row.q1_random ) +
           "," + detail::format_double( row.q3_random ) + "\n";
  }
  detail::write_text_file( spec.out_dir / "rq4_ratios.csv", csv );

  bool anneal_below = true;
  for ( auto const& row : rows )
    anneal_below = anneal_below && row.median_anneal <= row.median_random;
  nlohmann::json rows_json = nlohmann::json::array();
  for ( auto const& row : rows )
  {
    rows_json.push_back( { { "n", row.address_bits },
                           { "median_anneal_ratio", row.median_anneal },
                           { "q1_anneal_ratio", row.q1_anneal },
                           { "q3_anneal_ratio", row.q3_anneal },
                           { "median_random_ratio", row.median_random },
                           { "q1_random_ratio", row.q1_random },
                           { "q3_random_ratio", row.q3_random } } );
  }
  detail::write_json_file( spec.out_dir / "rq4_summary.json",
                           { { "instances_per_n", spec.instance_count },
                             { "d", spec.data_bits },
                             { "master_seed", spec.master_seed },
                             { "budget", spec.budget },
                             { "rows", rows_json },
                             { "anneal_at_or_below_random_at_every_n", anneal_below } } );
  return rows;
}

struct rq5_summary
{
  double median_anneal_final_ratio{ 0.0 };
  double median_random_final_ratio{ 0.0 };
  bool anneal_below_random{ false };
  bool traces_non_increasing{ true };
};

/*! \brief Anytime behavior at a single size: per-step median best/baseline curves for both methods. */
inline rq5_summary run_rq5( experiment_spec const& spec )
{
  validate( spec );
  std::filesystem::create_directories( spec.out_dir );

  struct pair_result
  {
    search_result anneal_res;
    search_result random_res;
  };
  std::vector<pair_result> results( spec.instance_count );

  detail::parallel_for_index( spec.instance_count, spec.threads, [&]( std::size_t i ) {
    uint64_t const seed = spec.master_seed + i;
    database const db = random_instance( spec.address_bits, spec.data_bits, seed );

    search_config cfg;
    cfg.budget = spec.budget;
    cfg.seed = seed;
    cfg.method = search_method::anneal;
    results[i].anneal_res = anneal( db, cfg );

    cfg.method = search_method::random;
    results[i].random_res = random_k( db, cfg );
  } );

  rq5_summary summary;

  auto const median_curve = [&]( auto&& select ) {
    std::string csv = "step,median_ratio\n";
    std::vector<double> final_ratios;
    for ( int64_t step = 0; step <= spec.budget; ++step )
    {
      std::vector<double> ratios;
      for ( auto const& pr : results )
      {
        auto const& trace = select( pr ).trace;
        double const baseline = double( trace.front().best_score );
        ratios.push_back( double( trace[step].best_score ) / baseline );
      }
      double const m = detail::median( ratios );
      csv += std::to_string( step ) + "," + detail::format_double( m ) + "\n";
      if ( step == spec.budget )
        final_ratios = std::move( ratios );
    }
    return std::pair{ csv, detail::median( final_ratios ) };
  };

  auto const [anneal_csv, anneal_final] =
      median_curve( []( auto const& pr ) -> search_result const& { return pr.anneal_res; } );
  auto const [random_csv, random_final] =
      median_curve( []( auto const& pr ) -> search_result const& { return pr.random_res; } );
  summary.median_anneal_final_ratio = anneal_final;
  summary.median_random_final_ratio = random_final;
  summary.anneal_below_random = anneal_final < random_final;

  for ( auto const& pr : results )
  {
    for ( auto const* res : { &pr.anneal_res, &pr.random_res } )
    {
      for ( std::size_t k = 1; k < res->trace.size(); ++k )
      {
        if ( res->trace[k].best_score > res->trace[k - 1].best_score )
          summary.traces_non_increasing = false;
      }
    }
  }

  detail::write_text_file( spec.out_dir / "rq5_anytime_anneal.csv", anneal_csv );
  detail::write_text_file( spec.out_dir / "rq5_anytime_random.csv", random_csv );
  for ( std::size_t i = 0; i < results.size(); ++i )
  {
    std::string const suffix = ( i < 10 ? "0" : "" ) + std::to_string( i ) + ".csv";
    detail::write_text_file( spec.out_dir / ( "rq5_trace_anneal_" + suffix ),
                             detail::trace_csv( results[i].anneal_res.trace ) );
    detail::write_text_file( spec.out_dir / ( "rq5_trace_random_" + suffix ),
                             detail::trace_csv( results[i].random_res.trace ) );
  }
  detail::write_json_file( spec.out_dir / "rq5_summary.json",
                           { { "instances", spec.instance_count },
                             { "n", spec.address_bits },
                             { "d", spec.data_bits },
                             { "master_seed", spec.master_seed },
                             { "budget", spec.budget },
                             { "median_anneal_final_ratio", summary.median_anneal_final_ratio },
                             { "median_random_final_ratio", summary.median_random_final_ratio },
                             { "anneal_below_random", summary.anneal_below_random },
                             { "traces_non_increasing", summary.traces_non_increasing } } );
  return summary;
}

} /* namespace qromopt */
