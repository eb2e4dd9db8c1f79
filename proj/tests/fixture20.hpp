#pragma once

#include <string>

// Twenty hand-written SIB2 observations over three countries. Location L1 in
// "de" has two same-index cells on one carrier, L2 has three, "fr" P1 has two
// pairs, one reserved index (30) and one exact duplicate row.
inline const std::string kFixture20 =
    "country,mno,location_id,area_class,band,earfcn,enodeb_id,cell_id,prach_config_index,"
    "num_ra_preambles,power_ramping_step_db,preamble_initial_target_power_dbm,preamble_trans_max,"
    "ra_response_window_sf,contention_resolution_timer_sf,highspeed_flag,zero_correlation_zone_config,"
    "prach_freq_offset\n"
    "de,tel,L1,urban,20,6300,100,1,3,52,2,-104,10,10,64,false,12,4\n"
    "de,tel,L1,urban,20,6300,100,2,3,52,2,-104,10,10,64,false,12,4\n"
    "de,tel,L1,urban,20,6300,100,3,4,52,2,-104,10,10,64,false,12,4\n"
    "de,voda,L1,urban,3,1300,200,1,3,52,2,-104,10,10,64,false,12,4\n"
    "de,tel,L2,suburban,20,6300,101,1,5,52,2,-104,10,10,64,false,12,4\n"
    "de,tel,L2,suburban,20,6300,101,2,5,52,2,-104,10,10,64,false,12,4\n"
    "de,tel,L2,suburban,20,6300,102,3,5,52,4,-104,10,10,64,false,12,4\n"
    "de,tel,L3,rural,20,6300,103,1,18,52,2,-104,10,10,64,false,13,4\n"
    "fr,ora,P1,urban,7,3000,300,1,1,64,2,-110,8,10,64,false,10,2\n"
    "fr,ora,P1,urban,7,3000,300,2,1,64,2,-110,8,10,64,false,10,2\n"
    "fr,ora,P1,urban,7,3000,300,3,2,64,2,-110,8,10,64,false,10,2\n"
    "fr,ora,P1,urban,7,3000,301,4,2,64,2,-110,8,10,64,false,10,2\n"
    "fr,sfr,P1,urban,7,2850,400,1,1,64,2,-110,8,10,64,false,10,2\n"
    "fr,sfr,P2,rural,20,6200,401,1,19,64,2,-110,8,10,64,true,10,2\n"
    "fr,sfr,P2,rural,20,6200,401,2,30,64,2,-110,8,10,64,false,10,2\n"
    "fr,ora,P1,urban,7,3000,300,1,1,64,2,-110,8,10,64,false,10,2\n"
    "it,tim,R1,urban,3,1850,500,1,0,52,2,-108,10,10,48,false,12,4\n"
    "it,tim,R1,urban,3,1850,500,2,1,52,2,-108,10,10,48,false,12,4\n"
    "it,tim,R2,suburban,3,1850,501,1,0,52,2,-108,10,10,48,false,12,4\n"
    "it,tim,L1,rural,3,1850,502,1,0,52,2,-108,10,10,48,false,12,4\n";
