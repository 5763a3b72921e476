#include <doctest.h>

#include <nv/fixtures.hpp>
#include <nv/svg.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nv;

TEST_CASE( "fixture corpus is self-consistent" )
{
  auto files = fixture_files();
  CHECK( files.count( "lawson-vdovina.json" ) );
  CHECK( files.count( "manifest.json" ) );
  CHECK( files.count( "uniform-2x2-tree-1.json" ) );
  CHECK( files.count( "uniform-2x2-tree-2.json" ) );

  // every json fixture parses and validates through its module
  for ( auto const& [name, content] : files )
  {
    if ( name.size() < 5 || name.substr( name.size() - 5 ) != ".json" || name == "manifest.json" )
      continue;
    auto j = json::parse( content );
    if ( name.rfind( "reg-", 0 ) == 0 )
    {
      auto reg = registry_from_json( j );
      CHECK( !reg.named().empty() );
    }
    else if ( j.contains( "pairs" ) )
    {
      CHECK( table_from_json( j ).validate().ok );
    }
    else if ( j.contains( "tuples" ) )
    {
      auto code = code_from_json( j );
      CHECK( !code.empty() );
    }
  }

  // the manifest pins every byte
  auto manifest = json::parse( files.at( "manifest.json" ) );
  for ( auto const& [name, content] : files )
  {
    if ( name == "manifest.json" )
      continue;
    REQUIRE( manifest.contains( name ) );
    CHECK( manifest[name]["bytes"].get<std::size_t>() == content.size() );
    char hex[17];
    std::snprintf( hex, sizeof hex, "%016llx", static_cast<unsigned long long>( fnv64( content ) ) );
    CHECK( manifest[name]["fnv64"].get<std::string>() == std::string( hex ) );
  }
}

TEST_CASE( "fixture semantics" )
{
  auto files = fixture_files();
  auto lv = code_from_json( json::parse( files.at( "lawson-vdovina.json" ) ) );
  CHECK( lv.is_maximal_joinless() );

  auto f = table_from_json( json::parse( files.at( "nonmax-f.json" ) ) );
  auto f1 = table_from_json( json::parse( files.at( "nonmax-f1.json" ) ) );
  auto f2 = table_from_json( json::parse( files.at( "nonmax-f2.json" ) ) );
  auto exts = maximal_extensions( f );
  REQUIRE( exts.size() == 2 );
  CHECK( ( exts[0] == f1 || exts[1] == f1 ) );
  CHECK( ( exts[0] == f2 || exts[1] == f2 ) );

  auto reg2 = registry_from_json( json::parse( files.at( "reg-2v.json" ) ) );
  auto relator = parse_word( files.at( "tau-sigma-relator.txt" ) );
  CHECK( is_identity_word( relator, reg2, identity_mode::table ).is_identity );
}

TEST_CASE( "installation is idempotent" )
{
  auto dir = std::filesystem::temp_directory_path() / "nv-fixture-test";
  std::filesystem::remove_all( dir );
  auto first = fixtures_install( dir );
  CHECK( !first.empty() );
  std::map<std::string, std::string> bytes;
  for ( auto const& name : first )
  {
    std::ifstream in( dir / name, std::ios::binary );
    std::stringstream ss;
    ss << in.rdbuf();
    bytes[name] = ss.str();
  }
  fixtures_install( dir );
  for ( auto const& name : first )
  {
    std::ifstream in( dir / name, std::ios::binary );
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK( ss.str() == bytes[name] );
  }
  std::filesystem::remove_all( dir );
}

TEST_CASE( "tiling svg" )
{
  auto svg = tiling_svg( code_from_json( json::parse( fixture_files().at( "max-code-2d.json" ) ) ) );
  CHECK( svg.find( "<svg" ) != std::string::npos );
  CHECK( svg.find( "<rect" ) != std::string::npos );
  CHECK( svg.find( "(-,0)" ) != std::string::npos );
  CHECK_THROWS_AS( tiling_svg( uniform_code( signature{ 1, 2 }, 1 ) ), error const& );
}
