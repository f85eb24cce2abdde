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
  \file qromopt.cpp
  \brief Command-line front end

  Subcommands: gen, minimize, search, exhaustive, verify, emit,
  experiment {rq1|rq3|rq4|rq5}.  Common flags (--seed, --budget, --out,
  --force) are accepted both before and after the subcommand.
*/

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <qromopt/circuit.hpp>
#include <qromopt/cost.hpp>
#include <qromopt/database.hpp>
#include <qromopt/esop.hpp>
#include <qromopt/experiments.hpp>
#include <qromopt/search.hpp>

namespace
{

struct cli_state
{
  uint64_t seed{ 0 };
  int64_t budget{ -1 }; /* -1 = subcommand default */
  std::string out;
  bool force{ false };

  uint32_t address_bits{ 3 };
  uint32_t data_bits{ 6 };
  uint32_t instances{ 15 };
  unsigned threads{ 1 };
  std::vector<uint32_t> n_list{ 4, 5, 6, 7 };

  std::string db_path;
  std::string perm_path;
  std::string circuit_path;
  std::string method{ "anneal" };
  double t_max{ 25000.0 };
  double t_min{ 2.5 };
  int64_t stall{ 0 };
};

void add_common_flags( CLI::App* cmd, cli_state& s )
{
  cmd->add_option( "--seed", s.seed, "random seed (master seed for experiments)" );
  cmd->add_option( "--budget", s.budget, "evaluation budget for randomized searches" );
  cmd->add_option( "--out", s.out, "output file or directory" );
  cmd->add_flag( "--force", s.force, "override size guards (exhaustive above N=8, rq1 above n=3)" );
}

int64_t budget_or( cli_state const& s, int64_t fallback )
{
  return s.budget < 0 ? fallback : s.budget;
}

std::filesystem::path require_out( cli_state const& s )
{
  if ( s.out.empty() )
    throw CLI::ValidationError( "--out", "an output directory is required" );
  return std::filesystem::path( s.out );
}

qromopt::database load_input_database( cli_state const& s )
{
  auto db = qromopt::load_database( s.db_path );
  if ( !s.perm_path.empty() )
    db = qromopt::reorder( db, qromopt::load_permutation( s.perm_path ) );
  return db;
}

qromopt::search_config make_search_config( cli_state const& s, int64_t default_budget )
{
  qromopt::search_config cfg;
  cfg.budget = budget_or( s, default_budget );
  cfg.seed = s.seed;
  cfg.t_max = s.t_max;
  cfg.t_min = s.t_min;
  cfg.stall_window = s.stall;
  if ( s.method == "anneal" )
    cfg.method = qromopt::search_method::anneal;
  else if ( s.method == "random" )
    cfg.method = qromopt::search_method::random;
  else if ( s.method == "exhaustive" )
    cfg.method = qromopt::search_method::exhaustive;
  else
    throw CLI::ValidationError( "--method", "must be one of anneal, random, exhaustive" );
  qromopt::validate( cfg );
  return cfg;
}

qromopt::experiment_spec make_experiment_spec( cli_state const& s, int64_t default_budget )
{
  qromopt::experiment_spec spec;
  spec.address_bits = s.address_bits;
  spec.data_bits = s.data_bits;
  spec.instance_count = s.instances;
  spec.master_seed = s.seed;
  spec.budget = budget_or( s, default_budget );
  spec.address_bits_list = s.n_list;
  spec.threads = s.threads;
  spec.out_dir = require_out( s );
  qromopt::validate( spec );
  return spec;
}

int cmd_gen( cli_state const& s )
{
  auto const db = qromopt::random_instance( s.address_bits, s.data_bits, s.seed );
  if ( s.out.empty() )
  {
    qromopt::write_database( db, std::cout );
  }
  else
  {
    qromopt::save_database( db, s.out );
    std::cout << "wrote " << s.out << " (n=" << db.num_address_bits << ", d=" << db.num_data_bits
              << ", seed=" << s.seed << ")\n";
  }
  return 0;
}

int cmd_minimize( cli_state const& s )
{
  auto const db = load_input_database( s );
  auto const covers = qromopt::minimize_database( db );
  auto const report = qromopt::make_cost_report( covers, db.num_address_bits );

  std::ostringstream listing;
  qromopt::write_covers( covers, listing );
  std::cout << listing.str();
  std::cout << nlohmann::json( report ).dump( 2 ) << "\n";

  if ( !s.out.empty() )
  {
    std::filesystem::path const dir( s.out );
    std::filesystem::create_directories( dir );
    qromopt::detail::write_text_file( dir / "covers.txt", listing.str() );
    qromopt::detail::write_json_file( dir / "report.json", nlohmann::json( report ) );
  }
  return 0;
}

int cmd_search( cli_state const& s, std::string const& forced_method, int64_t default_budget )
{
  cli_state local = s;
  if ( !forced_method.empty() )
    local.method = forced_method;
  auto const db = load_input_database( local );
  auto const cfg = make_search_config( local, default_budget );
  auto const report = qromopt::run_search_command( db, cfg, require_out( local ), local.force, cfg.seed );

  auto const& outcome = report.methods.at( qromopt::to_string( cfg.method ) );
  std::cout << "baseline proxy " << report.baseline << ", best proxy " << outcome.best
            << " (ratio " << outcome.ratio_vs_baseline << "), T-count " << report.t_count_baseline
            << " -> " << outcome.t_count << "\n";
  std::cout << "artifacts in " << s.out << "\n";
  return 0;
}

int cmd_verify( cli_state const& s )
{
  auto const db = load_input_database( s );
  std::ifstream in( s.circuit_path );
  if ( !in )
    throw std::runtime_error( "cannot open circuit file: " + s.circuit_path );
  auto const circ = nlohmann::json::parse( in ).get<qromopt::circuit>();

  auto const result = qromopt::verify( circ, db );
  if ( result )
  {
    std::cout << "OK: circuit reproduces all " << db.num_entries() << " entries\n";
    return 0;
  }
  std::cout << "MISMATCH at address " << result.address << ": expected "
            << qromopt::format_data_word( result.expected, db.num_data_bits ) << ", got "
            << qromopt::format_data_word( result.actual, db.num_data_bits ) << "\n";
  return 1;
}

int cmd_emit( cli_state const& s )
{
  auto const db = load_input_database( s );
  auto const covers = qromopt::minimize_database( db );
  auto const circ = qromopt::emit_circuit( covers );
  if ( auto const check = qromopt::verify( circ, db ); !check )
    throw std::runtime_error( "internal error: emitted circuit fails verification at address " +
                              std::to_string( check.address ) );

  if ( s.out.empty() )
  {
    std::cout << qromopt::to_qasm( circ );
  }
  else
  {
    std::filesystem::path const dir( s.out );
    std::filesystem::create_directories( dir );
    qromopt::detail::write_text_file( dir / "circuit.qasm", qromopt::to_qasm( circ ) );
    qromopt::detail::write_json_file( dir / "circuit.json", nlohmann::json( circ ) );
    qromopt::detail::write_json_file(
        dir / "report.json", nlohmann::json( qromopt::make_cost_report( covers, db.num_address_bits ) ) );
    std::cout << "wrote circuit.qasm, circuit.json, report.json to " << s.out << "\n";
  }
  return 0;
}

int cmd_rq1( cli_state const& s )
{
  if ( s.address_bits != 3 && !s.force )
    throw CLI::ValidationError( "--n", "rq1 exhausts all N! orderings; n != 3 requires --force" );
  auto const summary = qromopt::run_rq1( make_experiment_spec( s, 1000 ), s.force );
  std::cout << "median max/min ratio " << summary.median_max_min_ratio << " (IQR "
            << summary.q1_max_min_ratio << "-" << summary.q3_max_min_ratio << "), median min/avg "
            << summary.median_min_avg_ratio << "\n";
  std::cout << "anneal within 10% of min on " << summary.anneal_within_10_percent << "/" << s.instances
            << " instances\n";
  return 0;
}

int cmd_rq3( cli_state const& s )
{
  auto const summary = qromopt::run_rq3( make_experiment_spec( s, 1000 ) );
  std::cout << "spearman rho " << summary.spearman << " over " << s.instances
            << " instances (T-counts from the 8k-12 formula estimate)\n";
  return 0;
}

int cmd_rq4( cli_state const& s )
{
  auto const rows = qromopt::run_rq4( make_experiment_spec( s, 1000 ) );
  for ( auto const& row : rows )
  {
    std::cout << "n=" << row.address_bits << ": median anneal ratio " << row.median_anneal
              << ", median random ratio " << row.median_random << "\n";
  }
  return 0;
}

int cmd_rq5( cli_state const& s )
{
  auto const summary = qromopt::run_rq5( make_experiment_spec( s, 10000 ) );
  std::cout << "median final ratio: anneal " << summary.median_anneal_final_ratio << ", random "
            << summary.median_random_final_ratio << "\n";
  return 0;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "address-permutation optimization for compact QROM circuits" };
  app.require_subcommand( 1 );

  cli_state s;
  add_common_flags( &app, s );

  auto* gen = app.add_subcommand( "gen", "generate a random database instance" );
  gen->add_option( "--n", s.address_bits, "address bits" )->capture_default_str();
  gen->add_option( "--d", s.data_bits, "data bits per entry" )->capture_default_str();
  add_common_flags( gen, s );

  auto* minimize = app.add_subcommand( "minimize", "minimize one ordering and report covers + cost" );
  minimize->add_option( "db", s.db_path, "database text file" )->required()->check( CLI::ExistingFile );
  minimize->add_option( "--perm", s.perm_path, "permutation file to apply first" )->check( CLI::ExistingFile );
  add_common_flags( minimize, s );

  auto* search = app.add_subcommand( "search", "optimize the address assignment" );
  search->add_option( "db", s.db_path, "database text file" )->required()->check( CLI::ExistingFile );
  search->add_option( "--method", s.method, "anneal | random | exhaustive" )->capture_default_str();
  search->add_option( "--tmax", s.t_max, "annealing start temperature" )->capture_default_str();
  search->add_option( "--tmin", s.t_min, "annealing end temperature" )->capture_default_str();
  search->add_option( "--stall", s.stall, "stop after this many non-improving steps (0 = off)" );
  add_common_flags( search, s );

  auto* exhaustive = app.add_subcommand( "exhaustive", "enumerate all N! orderings (N <= 8 unless --force)" );
  exhaustive->add_option( "db", s.db_path, "database text file" )->required()->check( CLI::ExistingFile );
  add_common_flags( exhaustive, s );

  auto* verify = app.add_subcommand( "verify", "check a circuit JSON against a database" );
  verify->add_option( "db", s.db_path, "database text file" )->required()->check( CLI::ExistingFile );
  verify->add_option( "circuit", s.circuit_path, "circuit JSON file" )->required()->check( CLI::ExistingFile );
  verify->add_option( "--perm", s.perm_path, "permutation file to apply first" )->check( CLI::ExistingFile );
  add_common_flags( verify, s );

  auto* emit = app.add_subcommand( "emit", "minimize and emit circuit files for one ordering" );
  emit->add_option( "db", s.db_path, "database text file" )->required()->check( CLI::ExistingFile );
  emit->add_option( "--perm", s.perm_path, "permutation file to apply first" )->check( CLI::ExistingFile );
  add_common_flags( emit, s );

  auto* experiment = app.add_subcommand( "experiment", "run a pre-registered experiment batch" );
  experiment->require_subcommand( 1 );
  auto const add_experiment_flags = [&]( CLI::App* cmd, bool with_n ) -> CLI::Option* {
    CLI::Option* n_opt = with_n ? cmd->add_option( "--n", s.address_bits, "address bits" ) : nullptr;
    cmd->add_option( "--d", s.data_bits, "data bits per entry" )->capture_default_str();
    cmd->add_option( "--instances", s.instances, "number of random instances" )->capture_default_str();
    cmd->add_option( "--threads", s.threads, "worker threads (0 = hardware)" )->capture_default_str();
    add_common_flags( cmd, s );
    return n_opt;
  };
  auto* rq1 = experiment->add_subcommand( "rq1", "ordering spread: exhaustive stats + anneal per instance" );
  add_experiment_flags( rq1, true );
  auto* rq3 = experiment->add_subcommand( "rq3", "proxy ratio vs T-count-estimate ratio correlation" );
  add_experiment_flags( rq3, true );
  auto* rq4 = experiment->add_subcommand( "rq4", "anneal vs random over a size sweep" );
  rq4->add_option( "--n-list", s.n_list, "address-bit sizes to sweep" );
  add_experiment_flags( rq4, false );
  auto* rq5 = experiment->add_subcommand( "rq5", "anytime curves at one size" );
  auto* rq5_n = add_experiment_flags( rq5, true );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( gen->parsed() )
      return cmd_gen( s );
    if ( minimize->parsed() )
      return cmd_minimize( s );
    if ( search->parsed() )
      return cmd_search( s, "", 1000 );
    if ( exhaustive->parsed() )
      return cmd_search( s, "exhaustive", 0 );
    if ( verify->parsed() )
      return cmd_verify( s );
    if ( emit->parsed() )
      return cmd_emit( s );
    if ( experiment->parsed() )
    {
      if ( rq1->parsed() )
        return cmd_rq1( s );
      if ( rq3->parsed() )
        return cmd_rq3( s );
      if ( rq4->parsed() )
        return cmd_rq4( s );
      if ( rq5->parsed() )
      {
        if ( rq5_n->count() == 0 )
          s.address_bits = 6; /* rq5 studies anytime behavior at a single larger size */
        return cmd_rq5( s );
      }
    }
  }
  catch ( CLI::Error const& e )
  {
    return app.exit( e );
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
