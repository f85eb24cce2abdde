#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <qromopt/experiments.hpp>

using namespace qromopt;
namespace fs = std::filesystem;

namespace
{

database example_database()
{
  return { 2u, 4u, { 0b1110u, 0b1001u, 0b0100u, 0b1111u } };
}

std::string slurp( fs::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  REQUIRE( in );
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct temp_dir
{
  fs::path path;

  explicit temp_dir( std::string const& name ) : path( fs::temp_directory_path() / name )
  {
    fs::remove_all( path );
    fs::create_directories( path );
  }
  ~temp_dir() { fs::remove_all( path ); }
};

experiment_spec small_spec( fs::path const& out )
{
  experiment_spec spec;
  spec.address_bits = 3;
  spec.data_bits = 4;
  spec.instance_count = 3;
  spec.master_seed = 0;
  spec.budget = 40;
  spec.threads = 1;
  spec.out_dir = out;
  return spec;
}

} // namespace

TEST_CASE( "parallel_for_index fills slots deterministically and propagates exceptions" )
{
  std::vector<int> serial( 40, 0 ), parallel( 40, 0 );
  detail::parallel_for_index( 40, 1, [&]( std::size_t i ) { serial[i] = int( i * i ); } );
  detail::parallel_for_index( 40, 4, [&]( std::size_t i ) { parallel[i] = int( i * i ); } );
  CHECK( serial == parallel );

  CHECK_THROWS_AS( detail::parallel_for_index( 10, 4,
                                               []( std::size_t i ) {
                                                 if ( i == 3 )
                                                   throw std::runtime_error( "boom" );
                                               } ),
                   std::runtime_error );
}

TEST_CASE( "quantiles interpolate linearly and degenerate on single samples" )
{
  CHECK( detail::median( { 3.0, 1.0, 2.0 } ) == doctest::Approx( 2.0 ) );
  CHECK( detail::quantile( { 1.0, 2.0, 3.0, 4.0 }, 0.25 ) == doctest::Approx( 1.75 ) );
  CHECK( detail::quantile( { 1.0, 2.0, 3.0, 4.0 }, 0.75 ) == doctest::Approx( 3.25 ) );
  CHECK( detail::quantile( { 5.0 }, 0.25 ) == detail::quantile( { 5.0 }, 0.75 ) );
  CHECK_THROWS_AS( detail::median( {} ), std::invalid_argument );
}

TEST_CASE( "doubles format without locale or precision surprises" )
{
  CHECK( detail::format_double( 0.5 ) == "0.5" );
  CHECK( detail::format_double( 2.097 ) == "2.097" );
  CHECK( detail::format_double( 1.0 ) == "1" );
}

TEST_CASE( "the pre-minimization size counts every minterm literal" )
{
  /* 10 one-bits across the example's tables, 2 address literals each */
  CHECK( detail::org_score( example_database() ) == 20 );
}

TEST_CASE( "search artifacts are complete, consistent, and byte-stable" )
{
  temp_dir dir( "qromopt_test_search_cmd" );
  auto const db = example_database();

  search_config cfg;
  cfg.method = search_method::exhaustive;
  auto const report = run_search_command( db, cfg, dir.path / "a" );

  CHECK( report.baseline == 11 );
  REQUIRE( report.exhaustive.has_value() );
  CHECK( report.methods.at( "exhaustive" ).best == report.exhaustive->min_score );

  auto const report_json = nlohmann::json::parse( slurp( dir.path / "a" / "report.json" ) );
  CHECK( report_json["evaluations"] == 24 );
  CHECK( report_json["baseline"] == 11 );

  auto const perm = load_permutation( dir.path / "a" / "permutation.txt" );
  auto const circ = nlohmann::json::parse( slurp( dir.path / "a" / "circuit.json" ) ).get<circuit>();
  CHECK( verify( circ, reorder( db, perm ) ).ok );

  auto const trace = slurp( dir.path / "a" / "trace.csv" );
  CHECK( trace.rfind( "step,best_score\n", 0 ) == 0 );

  /* identical invocation => identical bytes */
  run_search_command( db, cfg, dir.path / "b" );
  for ( auto const* name : { "report.json", "permutation.txt", "circuit.qasm", "circuit.json", "trace.csv" } )
    CHECK( slurp( dir.path / "a" / name ) == slurp( dir.path / "b" / name ) );
}

TEST_CASE( "rq1 reports exhaustive statistics and anneal outcomes per instance" )
{
  temp_dir dir( "qromopt_test_rq1" );
  auto const summary = run_rq1( small_spec( dir.path ) );

  REQUIRE( summary.instances.size() == 3 );
  for ( auto const& report : summary.instances )
  {
    REQUIRE( report.exhaustive.has_value() );
    auto const& stats = *report.exhaustive;
    CHECK( double( stats.min_score ) <= stats.avg_score );
    CHECK( stats.avg_score <= double( stats.max_score ) );
    for ( auto const& [name, outcome] : report.methods )
    {
      CHECK( outcome.best >= stats.min_score );
      CHECK( outcome.best <= report.baseline ); /* identity is always visited */
    }
    CHECK( report.methods.at( "exhaustive" ).best == stats.min_score );
  }

  CHECK( fs::exists( dir.path / "rq1_instances.json" ) );
  auto const j = nlohmann::json::parse( slurp( dir.path / "rq1_summary.json" ) );
  CHECK( j["max_min_ratio"].contains( "median" ) );
  CHECK( j["min_avg_ratio"].contains( "median" ) );

  auto const instances = nlohmann::json::parse( slurp( dir.path / "rq1_instances.json" ) );
  CHECK( instances.size() == 3 );
}

TEST_CASE( "rq3 writes one scatter row per instance" )
{
  temp_dir dir( "qromopt_test_rq3" );
  auto spec = small_spec( dir.path );
  spec.instance_count = 4;
  auto const summary = run_rq3( spec );

  CHECK( summary.proxy_ratios.size() == 4 );
  auto const csv = slurp( dir.path / "rq3_scatter.csv" );
  CHECK( std::count( csv.begin(), csv.end(), '\n' ) == 5 ); /* header + 4 rows */

  auto const j = nlohmann::json::parse( slurp( dir.path / "rq3_summary.json" ) );
  CHECK( j.contains( "spearman_rho" ) );
  CHECK( j.contains( "t_count_source" ) );

  spec.instance_count = 1;
  CHECK_THROWS_AS( run_rq3( spec ), std::invalid_argument );
}

TEST_CASE( "rq4 sweeps sizes; zero budget pins every ratio at 1" )
{
  temp_dir dir( "qromopt_test_rq4" );
  auto spec = small_spec( dir.path );
  spec.address_bits_list = { 2, 3 };
  spec.budget = 0;
  auto const rows = run_rq4( spec );

  REQUIRE( rows.size() == 2 );
  for ( auto const& row : rows )
  {
    CHECK( row.median_anneal == doctest::Approx( 1.0 ) );
    CHECK( row.median_random == doctest::Approx( 1.0 ) );
  }

  auto const csv = slurp( dir.path / "rq4_ratios.csv" );
  CHECK( std::count( csv.begin(), csv.end(), '\n' ) == 3 );
  CHECK( nlohmann::json::parse( slurp( dir.path / "rq4_summary.json" ) )["rows"].size() == 2 );
}

TEST_CASE( "rq5 exports full anytime traces and median curves" )
{
  temp_dir dir( "qromopt_test_rq5" );
  auto const summary = run_rq5( small_spec( dir.path ) );

  CHECK( summary.traces_non_increasing );

  auto const curve = slurp( dir.path / "rq5_anytime_anneal.csv" );
  CHECK( std::count( curve.begin(), curve.end(), '\n' ) == 42 ); /* header + steps 0..40 */
  CHECK( fs::exists( dir.path / "rq5_trace_anneal_00.csv" ) );
  CHECK( fs::exists( dir.path / "rq5_trace_random_02.csv" ) );

  auto const j = nlohmann::json::parse( slurp( dir.path / "rq5_summary.json" ) );
  CHECK( j["budget"] == 40 );
}

TEST_CASE( "experiment outputs are byte-identical across runs and thread counts" )
{
  temp_dir one( "qromopt_test_det1" );
  temp_dir two( "qromopt_test_det2" );
  temp_dir four( "qromopt_test_det4" );

  run_rq1( small_spec( one.path ) );
  run_rq1( small_spec( two.path ) );
  auto threaded = small_spec( four.path );
  threaded.threads = 4;
  run_rq1( threaded );

  for ( auto const* name : { "rq1_instances.json", "rq1_summary.json" } )
  {
    CHECK( slurp( one.path / name ) == slurp( two.path / name ) );
    CHECK( slurp( one.path / name ) == slurp( four.path / name ) );
  }
}

TEST_CASE( "experiment specs are validated" )
{
  experiment_spec no_out;
  CHECK_THROWS_AS( validate( no_out ), std::invalid_argument );

  auto spec = small_spec( fs::temp_directory_path() / "qromopt_unused" );
  spec.instance_count = 0;
  CHECK_THROWS_AS( validate( spec ), std::invalid_argument );
}
