// Command-line front end: classification, closures, decompositions and the verification suites.

#include <minion/io.hpp>
#include <minion/minion.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>

namespace
{

using minion::io::json;

enum exit_status : int
{
  exit_ok = 0,
  exit_mismatch = 1,
  exit_usage = 2,
  exit_invalid = 3
};

struct options
{
  std::string format = "text";
  unsigned max_arity = 0;
};

unsigned arity_cap( const options& o )
{
  const unsigned env = minion::arity_cap_from_env();
  if ( o.max_arity == 0 )
    return env;
  if ( o.max_arity > minion::max_arity )
    throw minion::arity_error( "--max-arity above the build cap of " + std::to_string( minion::max_arity ) );
  return o.max_arity;
}

std::vector<minion::truth_table> parse_all( const std::vector<std::string>& texts, unsigned cap )
{
  std::vector<minion::truth_table> out;
  for ( const auto& t : texts )
    out.push_back( minion::parse( t, cap ) );
  return out;
}

std::pair<unsigned, unsigned> parse_bound( const std::string& s )
{
  const auto comma = s.find( ',' );
  if ( comma == std::string::npos )
    throw std::invalid_argument( "--bound expects k,m" );
  try
  {
    return { static_cast<unsigned>( std::stoul( s.substr( 0, comma ) ) ), static_cast<unsigned>( std::stoul( s.substr( comma + 1 ) ) ) };
  }
  catch ( const std::exception& )
  {
    throw std::invalid_argument( "--bound expects k,m with integers" );
  }
}

void print( const json& j )
{
  std::cout << j.dump( 2 ) << '\n';
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Boolean function classes stable under majority: classification and verification" };
  app.require_subcommand( 1 );
  options opt;
  app.add_option( "--format", opt.format, "Output format" )->check( CLI::IsMember( { "text", "json", "dot" } ) );
  app.add_option( "--max-arity", opt.max_arity, "Largest accepted input arity (default: build cap or MINION_MAX_ARITY)" );

  std::function<int()> run;

  /* classify */
  std::vector<std::string> fns;
  auto* classify = app.add_subcommand( "classify", "Smallest class generated by the given functions" );
  classify->add_option( "functions", fns, "Truth tables n:bits" );
  classify->callback( [&] {
    run = [&] {
      const auto F = parse_all( fns, arity_cap( opt ) );
      const auto c = minion::classify( F );
      if ( opt.format == "json" )
        print( { { "class", c.cls.name() }, { "checked_arity", c.checked_arity } } );
      else
        std::cout << c.cls.name() << '\n';
      return exit_ok;
    };
  } );

  /* closure */
  unsigned arity = 0;
  std::string c1_name, c2_name;
  auto* closure = app.add_subcommand( "closure", "Slice of the class generated by the functions" );
  closure->add_option( "--arity", arity, "Slice arity (1..4)" )->required();
  closure->add_option( "--c1", c1_name, "Inner clone; with --c2 computes c2 (F c1)" );
  closure->add_option( "--c2", c2_name, "Outer clone with a generating set" );
  closure->add_option( "functions", fns, "Truth tables n:bits" );
  closure->callback( [&] {
    run = [&] {
      const auto F = parse_all( fns, arity_cap( opt ) );
      minion::fn_set S( std::max( 1u, std::min( arity, 4u ) ) );
      if ( c1_name.empty() != c2_name.empty() )
        throw std::invalid_argument( "--c1 and --c2 must be given together" );
      if ( c1_name.empty() )
        S = minion::sm_closure( F, arity );
      else
        S = minion::stable_closure( F, minion::clone_id::from_name( c1_name ), minion::clone_id::from_name( c2_name ), arity );
      if ( opt.format == "json" )
        print( { { "arity", arity }, { "members", minion::io::to_json( S ) } } );
      else
        std::cout << minion::to_lines( S );
      return exit_ok;
    };
  } );

  /* member */
  std::string class_name, fn_text;
  auto* member = app.add_subcommand( "member", "Whether a function belongs to a class" );
  member->add_option( "--class", class_name, "Class name" )->required();
  member->add_option( "function", fn_text, "Truth table n:bits" )->required();
  member->callback( [&] {
    run = [&] {
      const auto f = minion::parse( fn_text, arity_cap( opt ) );
      const auto c = minion::class_id::from_name( class_name );
      const bool in = minion::class_member( c, f );
      if ( opt.format == "json" )
        print( { { "class", c.name() }, { "function", minion::format( f ) }, { "member", in } } );
      else
        std::cout << ( in ? "true" : "false" ) << '\n';
      return exit_ok;
    };
  } );

  /* minors */
  auto* minors = app.add_subcommand( "minors", "All minors of a function at one arity" );
  minors->add_option( "--arity", arity, "Target arity" )->required();
  minors->add_option( "function", fn_text, "Truth table n:bits" )->required();
  minors->callback( [&] {
    run = [&] {
      const auto cap = arity_cap( opt );
      const auto f = minion::parse( fn_text, cap );
      if ( arity < 1u || arity > cap )
        throw minion::arity_error( "--arity outside 1.." + std::to_string( cap ) );
      const auto S = minion::all_minors( f, arity );
      if ( opt.format == "json" )
        print( { { "arity", arity }, { "members", minion::io::to_json( S ) } } );
      else
        std::cout << minion::to_lines( S );
      return exit_ok;
    };
  } );

  /* decompose */
  std::vector<std::string> gens;
  auto* decompose = app.add_subcommand( "decompose", "Write a target as a self-dual monotone function of minors of the generators" );
  decompose->add_option( "--gens", gens, "Generators n:bits" )->required();
  decompose->add_option( "target", fn_text, "Target n:bits" )->required();
  decompose->callback( [&] {
    run = [&] {
      const auto cap = arity_cap( opt );
      const auto G = parse_all( gens, cap );
      const auto f = minion::parse( fn_text, cap );
      const auto d = minion::sm_decompose( f, G );
      if ( opt.format == "json" )
        print( minion::io::to_json( d ) );
      else
      {
        std::cout << "h " << d.h.format() << '\n';
        for ( const auto& p : d.phis )
        {
          std::cout << "phi gen=" << p.gen_index << " sigma=";
          for ( auto v : p.sigma.image() )
            std::cout << v;
          std::cout << ' ' << minion::format( p.table ) << '\n';
        }
      }
      return exit_ok;
    };
  } );

  /* extend-sm */
  unsigned n = 0;
  std::vector<std::string> trues, falses;
  auto* extend = app.add_subcommand( "extend-sm", "Self-dual monotone function with prescribed true and false points" );
  extend->add_option( "--n", n, "Arity" )->required();
  extend->add_option( "--true", trues, "Required true points as bit strings" );
  extend->add_option( "--false", falses, "Required false points as bit strings" );
  extend->callback( [&] {
    run = [&] {
      minion::point_sets ps{ n, {}, {} };
      for ( const auto* src : { &trues, &falses } )
        for ( const auto& t : *src )
        {
          if ( t.size() != n )
            throw std::invalid_argument( "tuple '" + t + "' does not have length " + std::to_string( n ) );
          ( src == &trues ? ps.T : ps.F ).push_back( minion::parse_tuple( t ) );
        }
      const auto h = minion::extend_sm_wide( ps );
      if ( opt.format == "json" )
        print( { { "table", h.format() } } );
      else
        std::cout << h.format() << '\n';
      return exit_ok;
    };
  } );

  /* lattice */
  bool dot = false;
  unsigned decision = 3;
  auto* lattice = app.add_subcommand( "lattice", "Inclusion order of the 93 classes" );
  lattice->add_flag( "--dot", dot, "Emit the Hasse diagram in DOT" );
  lattice->add_option( "--arity", decision, "Decision arity (2..4)" );
  lattice->callback( [&] {
    run = [&] {
      const auto l = minion::build_lattice( decision );
      if ( dot || opt.format == "dot" )
        std::cout << minion::to_dot( l );
      else if ( opt.format == "json" )
        print( minion::io::lattice_json( l ) );
      else
      {
        for ( const auto& [lo, hi] : l.covers() )
          std::cout << lo.name() << " < " << hi.name() << '\n';
      }
      return exit_ok;
    };
  } );

  /* verify-93 */
  auto* verify93 = app.add_subcommand( "verify-93", "Checks of the class roster" );
  verify93->callback( [&] {
    run = [&] {
      const auto checks = minion::roster_checks();
      bool ok = true;
      json arr = json::array();
      for ( const auto& c : checks )
      {
        ok = ok && c.passed;
        arr.push_back( { { "name", c.name }, { "passed", c.passed }, { "detail", c.detail } } );
      }
      if ( opt.format == "json" )
        print( { { "passed", ok }, { "checks", arr } } );
      else
        for ( const auto& c : checks )
          std::cout << ( c.passed ? "PASS " : "FAIL " ) << c.name << ": " << c.detail << '\n';
      return ok ? exit_ok : exit_mismatch;
    };
  } );

  /* verify-table */
  std::string bound_text = "3,3";
  auto* vtable = app.add_subcommand( "verify-table", "Reproduce the stability table by bounded search" );
  vtable->add_option( "--bound", bound_text, "k,m: clone and class member arities (each 1..3)" );
  vtable->callback( [&] {
    run = [&] {
      const auto [k, m] = parse_bound( bound_text );
      const auto rep = minion::verify_table2( { k, m } );
      if ( opt.format == "json" )
        print( minion::io::to_json( rep ) );
      else
      {
        for ( const auto& e : rep.entries )
          if ( !e.matches() )
            std::cout << "MISMATCH " << e.cls.name() << ' ' << e.clone.name() << ' '
                      << ( e.which == minion::side::right ? "right" : "left" ) << " expected "
                      << ( e.expected ? "stable" : "unstable" ) << '\n';
        std::cout << rep.entries.size() << " checks at bound (" << k << ',' << m << "), " << rep.mismatches() << " mismatches\n";
      }
      return rep.mismatches() == 0 ? exit_ok : exit_mismatch;
    };
  } );

  /* stable-for */
  auto* stable = app.add_subcommand( "stable-for", "Classes stable under right composition with c1 and left composition with c2" );
  stable->add_option( "--c1", c1_name, "Inner clone" )->required();
  stable->add_option( "--c2", c2_name, "Outer clone (must contain SM)" )->required();
  stable->callback( [&] {
    run = [&] {
      const auto c1 = minion::clone_id::from_name( c1_name );
      const auto c2 = minion::clone_id::from_name( c2_name );
      const auto list = minion::stable_classes_for( c1, c2 );
      if ( opt.format == "json" )
      {
        json names = json::array();
        for ( auto c : list )
          names.push_back( c.name() );
        print( { { "c1", c1.name() }, { "c2", c2.name() }, { "count", list.size() }, { "classes", names } } );
      }
      else
        for ( auto c : list )
          std::cout << c.name() << '\n';
      return exit_ok;
    };
  } );

  /* roster */
  auto* rost = app.add_subcommand( "roster", "Class roster with expressions, table columns and stable-class lists (JSON)" );
  rost->callback( [&] {
    run = [&] {
      print( minion::io::roster_json() );
      return exit_ok;
    };
  } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_usage;
  }

  try
  {
    return run();
  }
  catch ( const minion::inconsistency_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_mismatch;
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  catch ( const std::domain_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
  catch ( const minion::budget_error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  }
}
