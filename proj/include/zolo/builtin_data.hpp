#pragma once

namespace zolo::detail {

// embedded copy of data/families.json (reference trees, component tables,
// family catalog); keep the two in sync
inline const char* builtin_data_json() {
    static const char* s = R"ZJSON(
{
 "degree7": {
  "component168_chebyshev": [
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       2,
       0
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       1
      ],
      "xy": [
       20.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       5,
       3
      ],
      "xy": [
       30.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       4
      ],
      "xy": [
       40.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       50.0,
       5.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       70.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       0
      ],
      "xy": [
       80.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3
      ],
      "xy": [
       90.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       2,
       1
      ],
      "xy": [
       90.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       3
      ],
      "xy": [
       100.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6
      ],
      "xy": [
       110.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       5,
       4
      ],
      "xy": [
       110.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       120.0,
       5.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       140.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       0
      ],
      "xy": [
       150.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3
      ],
      "xy": [
       150.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       5,
       2,
       1
      ],
      "xy": [
       160.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       3
      ],
      "xy": [
       170.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       3
      ],
      "xy": [
       170.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       4
      ],
      "xy": [
       180.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       190.0,
       5.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       210.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       0
      ],
      "xy": [
       220.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       4
      ],
      "xy": [
       230.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       1
      ],
      "xy": [
       230.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       5,
       2,
       3
      ],
      "xy": [
       240.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       250.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       4
      ],
      "xy": [
       250.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       260.0,
       5.0
      ]
     }
    ]
   }
  ],
  "component2520_chebyshev": [
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       2,
       0
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       1
      ],
      "xy": [
       20.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       5,
       3
      ],
      "xy": [
       30.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       4
      ],
      "xy": [
       40.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       50.0,
       5.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       70.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       0
      ],
      "xy": [
       80.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3
      ],
      "xy": [
       90.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       2,
       1
      ],
      "xy": [
       90.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       3
      ],
      "xy": [
       100.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6
      ],
      "xy": [
       110.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       5,
       4
      ],
      "xy": [
       110.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       120.0,
       5.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       140.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       150.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       160.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       170.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       180.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6,
       7,
       4
      ],
      "xy": [
       190.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       200.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       5
      ],
      "xy": [
       190.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       220.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       230.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       240.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       7,
       2
      ],
      "xy": [
       250.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       260.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       270.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       280.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       3
      ],
      "xy": [
       250.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       6,
       2,
       7,
       0
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       20.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       40.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       50.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       25.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       70.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       80.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       6,
       3,
       7,
       1
      ],
      "xy": [
       90.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       100.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       110.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       120.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       2
      ],
      "xy": [
       90.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       2
      ],
      "xy": [
       90.0,
       25.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       140.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       150.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       5,
       3,
       7,
       6,
       1
      ],
      "xy": [
       160.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       170.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       180.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       2
      ],
      "xy": [
       160.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       2
      ],
      "xy": [
       150.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       2
      ],
      "xy": [
       170.0,
       25.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       200.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       210.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       7,
       5,
       6,
       1
      ],
      "xy": [
       220.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       230.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       240.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       2
      ],
      "xy": [
       220.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       2
      ],
      "xy": [
       210.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       2
      ],
      "xy": [
       230.0,
       25.0
      ]
     }
    ]
   }
  ],
  "final_pair": [
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       7,
       6,
       1
      ],
      "xy": [
       20.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       40.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       50.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       2
      ],
      "xy": [
       10.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       2
      ],
      "xy": [
       30.0,
       25.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       90.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       6,
       2,
       7,
       0
      ],
      "xy": [
       100.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       110.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       120.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       130.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       140.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       1
      ],
      "xy": [
       100.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       1
      ],
      "xy": [
       100.0,
       25.0
      ]
     }
    ]
   }
  ],
  "intersection": [
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       2,
       0
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       1
      ],
      "xy": [
       20.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       5,
       3
      ],
      "xy": [
       30.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       4
      ],
      "xy": [
       40.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       50.0,
       5.0
      ]
     }
    ]
   },
   {
    "n_edges": 7,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       100.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       3,
       0
      ],
      "xy": [
       110.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3
      ],
      "xy": [
       120.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       2,
       1
      ],
      "xy": [
       120.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       3
      ],
      "xy": [
       130.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6
      ],
      "xy": [
       140.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       7,
       5,
       4
      ],
      "xy": [
       140.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       150.0,
       5.0
      ]
     }
    ]
   }
  ],
  "order168": [
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       4
      ],
      "xy": [
       0.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1,
       3
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       2,
       4
      ],
      "xy": [
       10.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3,
       6,
       5,
       0
      ],
      "xy": [
       10.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       10.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       7,
       4
      ],
      "xy": [
       20.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       6
      ],
      "xy": [
       30.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       10,
       7
      ],
      "xy": [
       40.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 9,
      "neighbors": [
       10
      ],
      "xy": [
       50.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 10,
      "neighbors": [
       9,
       14,
       11,
       8
      ],
      "xy": [
       50.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 11,
      "neighbors": [
       10,
       12
      ],
      "xy": [
       50.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 12,
      "neighbors": [
       11,
       13
      ],
      "xy": [
       50.0,
       55.0
      ]
     },
     {
      "color": "grey",
      "id": 13,
      "neighbors": [
       12
      ],
      "xy": [
       50.0,
       65.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       10
      ],
      "xy": [
       60.0,
       35.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       80.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       90.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       100.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       8,
       5,
       2
      ],
      "xy": [
       110.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       110.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       3,
       6
      ],
      "xy": [
       110.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5,
       7
      ],
      "xy": [
       110.0,
       55.0
      ]
     },
     {
      "color": "grey",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       110.0,
       65.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       9,
       3
      ],
      "xy": [
       120.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 9,
      "neighbors": [
       10,
       8
      ],
      "xy": [
       130.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       11,
       9
      ],
      "xy": [
       140.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       12,
       14,
       13,
       10
      ],
      "xy": [
       150.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       11
      ],
      "xy": [
       150.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 13,
      "neighbors": [
       11
      ],
      "xy": [
       150.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       11
      ],
      "xy": [
       160.0,
       35.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       180.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       190.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       200.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       10,
       5,
       2
      ],
      "xy": [
       210.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       210.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       3,
       6
      ],
      "xy": [
       210.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5,
       9,
       7,
       8
      ],
      "xy": [
       210.0,
       55.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       210.0,
       65.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       6
      ],
      "xy": [
       200.0,
       55.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       6
      ],
      "xy": [
       220.0,
       55.0
      ]
     },
     {
      "color": "grey",
      "id": 10,
      "neighbors": [
       11,
       3
      ],
      "xy": [
       220.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       12,
       10
      ],
      "xy": [
       230.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 12,
      "neighbors": [
       13,
       11
      ],
      "xy": [
       240.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       250.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       260.0,
       35.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       3
      ],
      "xy": [
       280.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       5
      ],
      "xy": [
       280.0,
       55.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       3
      ],
      "xy": [
       290.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       2,
       7,
       4,
       0
      ],
      "xy": [
       290.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 4,
      "neighbors": [
       3,
       5
      ],
      "xy": [
       290.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4,
       8,
       6,
       1
      ],
      "xy": [
       290.0,
       55.0
      ]
     },
     {
      "color": "grey",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       290.0,
       65.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       9,
       3
      ],
      "xy": [
       300.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 8,
      "neighbors": [
       10,
       5
      ],
      "xy": [
       300.0,
       55.0
      ]
     },
     {
      "color": "white",
      "id": 9,
      "neighbors": [
       11,
       7
      ],
      "xy": [
       310.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 10,
      "neighbors": [
       12,
       8
      ],
      "xy": [
       310.0,
       55.0
      ]
     },
     {
      "color": "grey",
      "id": 11,
      "neighbors": [
       13,
       9
      ],
      "xy": [
       320.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       10
      ],
      "xy": [
       320.0,
       55.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       11
      ],
      "xy": [
       330.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       340.0,
       35.0
      ]
     }
    ]
   }
  ],
  "order2520": [
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "grey",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       4,
       3,
       0
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       20.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       7,
       5
      ],
      "xy": [
       40.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       6
      ],
      "xy": [
       50.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       9,
       7
      ],
      "xy": [
       60.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 9,
      "neighbors": [
       10,
       8
      ],
      "xy": [
       70.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       11,
       9
      ],
      "xy": [
       80.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       12,
       14,
       13,
       10
      ],
      "xy": [
       90.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       11
      ],
      "xy": [
       90.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 13,
      "neighbors": [
       11
      ],
      "xy": [
       90.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       11
      ],
      "xy": [
       100.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "grey",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       120.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       130.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       140.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       6,
       5,
       2
      ],
      "xy": [
       150.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       150.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 5,
      "neighbors": [
       3
      ],
      "xy": [
       150.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       7,
       3
      ],
      "xy": [
       160.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       6
      ],
      "xy": [
       170.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       9,
       7
      ],
      "xy": [
       180.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 9,
      "neighbors": [
       10,
       12,
       11,
       8
      ],
      "xy": [
       190.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       9
      ],
      "xy": [
       190.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 11,
      "neighbors": [
       9
      ],
      "xy": [
       190.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       13,
       9
      ],
      "xy": [
       200.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       210.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       220.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "grey",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       240.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       4,
       3,
       0
      ],
      "xy": [
       250.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       250.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       250.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       260.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       270.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       7,
       5
      ],
      "xy": [
       280.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       10,
       9,
       6
      ],
      "xy": [
       290.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       7
      ],
      "xy": [
       290.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       7
      ],
      "xy": [
       290.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       11,
       7
      ],
      "xy": [
       300.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       12,
       10
      ],
      "xy": [
       310.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       13,
       11
      ],
      "xy": [
       320.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       330.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       340.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       4,
       3,
       0
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       20.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 6,
      "neighbors": [
       7,
       5
      ],
      "xy": [
       40.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       6
      ],
      "xy": [
       50.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 8,
      "neighbors": [
       9,
       7
      ],
      "xy": [
       60.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 9,
      "neighbors": [
       10,
       14,
       11,
       8
      ],
      "xy": [
       70.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 10,
      "neighbors": [
       9
      ],
      "xy": [
       70.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 11,
      "neighbors": [
       9,
       12
      ],
      "xy": [
       70.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 12,
      "neighbors": [
       11,
       13
      ],
      "xy": [
       70.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 13,
      "neighbors": [
       12
      ],
      "xy": [
       70.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       9
      ],
      "xy": [
       80.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       100.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       110.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       120.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       130.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       140.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       150.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 6,
      "neighbors": [
       7,
       5
      ],
      "xy": [
       160.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       9,
       10,
       6
      ],
      "xy": [
       170.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 8,
      "neighbors": [
       7
      ],
      "xy": [
       170.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       7
      ],
      "xy": [
       180.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       7,
       11
      ],
      "xy": [
       170.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       10,
       14,
       13,
       12
      ],
      "xy": [
       170.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       11
      ],
      "xy": [
       160.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 13,
      "neighbors": [
       11
      ],
      "xy": [
       170.0,
       45.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       11
      ],
      "xy": [
       180.0,
       35.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       200.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       4,
       3,
       0
      ],
      "xy": [
       210.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       210.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       210.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       220.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       10,
       7,
       4
      ],
      "xy": [
       230.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       230.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 7,
      "neighbors": [
       5,
       8
      ],
      "xy": [
       230.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 8,
      "neighbors": [
       7,
       9
      ],
      "xy": [
       230.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 9,
      "neighbors": [
       8
      ],
      "xy": [
       230.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       11,
       5
      ],
      "xy": [
       240.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       12,
       10
      ],
      "xy": [
       250.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       13,
       11
      ],
      "xy": [
       260.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       270.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       280.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       6,
       3,
       0
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       1,
       4
      ],
      "xy": [
       10.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3,
       5
      ],
      "xy": [
       10.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       10.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       7,
       1
      ],
      "xy": [
       20.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       10,
       9,
       6
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       7
      ],
      "xy": [
       30.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       7
      ],
      "xy": [
       30.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       11,
       7
      ],
      "xy": [
       40.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       12,
       10
      ],
      "xy": [
       50.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       13,
       11
      ],
      "xy": [
       60.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       70.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       80.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       100.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       6,
       3,
       0
      ],
      "xy": [
       110.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       110.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       1,
       4
      ],
      "xy": [
       110.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3,
       5
      ],
      "xy": [
       110.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       110.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       7,
       1
      ],
      "xy": [
       120.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       6
      ],
      "xy": [
       130.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       9,
       7
      ],
      "xy": [
       140.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 9,
      "neighbors": [
       10,
       14,
       11,
       8
      ],
      "xy": [
       150.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       9
      ],
      "xy": [
       150.0,
       5.0
      ]
     },
     {
      "color": "black",
      "id": 11,
      "neighbors": [
       9,
       12
      ],
      "xy": [
       150.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 12,
      "neighbors": [
       11,
       13
      ],
      "xy": [
       150.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 13,
      "neighbors": [
       12
      ],
      "xy": [
       150.0,
       45.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       9
      ],
      "xy": [
       160.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "grey",
      "id": 0,
      "neighbors": [
       5
      ],
      "xy": [
       200.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       180.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       190.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       7,
       2
      ],
      "xy": [
       200.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5
      ],
      "xy": [
       210.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4,
       9,
       6,
       0
      ],
      "xy": [
       210.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       5,
       7
      ],
      "xy": [
       210.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       6,
       10,
       8,
       3
      ],
      "xy": [
       210.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 8,
      "neighbors": [
       7
      ],
      "xy": [
       210.0,
       45.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       11,
       5
      ],
      "xy": [
       220.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 10,
      "neighbors": [
       7
      ],
      "xy": [
       220.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       12,
       9
      ],
      "xy": [
       230.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 12,
      "neighbors": [
       13,
       11
      ],
      "xy": [
       240.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       250.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       260.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       2
      ],
      "xy": [
       280.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       290.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1,
       6,
       3,
       0
      ],
      "xy": [
       290.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       2,
       4
      ],
      "xy": [
       290.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3,
       5
      ],
      "xy": [
       290.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       290.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       8,
       2
      ],
      "xy": [
       300.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 7,
      "neighbors": [
       8
      ],
      "xy": [
       310.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 8,
      "neighbors": [
       7,
       12,
       9,
       6
      ],
      "xy": [
       310.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       8,
       10
      ],
      "xy": [
       310.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 10,
      "neighbors": [
       9,
       11
      ],
      "xy": [
       310.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 11,
      "neighbors": [
       10
      ],
      "xy": [
       310.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 12,
      "neighbors": [
       13,
       8
      ],
      "xy": [
       320.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       330.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       340.0,
       15.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       4,
       3,
       0
      ],
      "xy": [
       10.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       10.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       20.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       30.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 6,
      "neighbors": [
       7,
       5
      ],
      "xy": [
       40.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       9,
       10,
       6
      ],
      "xy": [
       50.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 8,
      "neighbors": [
       7
      ],
      "xy": [
       50.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       7
      ],
      "xy": [
       60.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 10,
      "neighbors": [
       7,
       11
      ],
      "xy": [
       50.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 11,
      "neighbors": [
       10,
       12
      ],
      "xy": [
       50.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 12,
      "neighbors": [
       11,
       13
      ],
      "xy": [
       50.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       12,
       14
      ],
      "xy": [
       50.0,
       55.0
      ]
     },
     {
      "color": "black",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       50.0,
       65.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       90.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       4,
       3,
       0
      ],
      "xy": [
       100.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       100.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       100.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       110.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       12,
       9,
       4
      ],
      "xy": [
       120.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 6,
      "neighbors": [
       7,
       5
      ],
      "xy": [
       120.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       6
      ],
      "xy": [
       120.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 8,
      "neighbors": [
       7
      ],
      "xy": [
       120.0,
       5.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       5,
       10
      ],
      "xy": [
       120.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 10,
      "neighbors": [
       9,
       11
      ],
      "xy": [
       120.0,
       55.0
      ]
     },
     {
      "color": "black",
      "id": 11,
      "neighbors": [
       10
      ],
      "xy": [
       120.0,
       65.0
      ]
     },
     {
      "color": "black",
      "id": 12,
      "neighbors": [
       13,
       5
      ],
      "xy": [
       130.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       140.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       150.0,
       35.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       180.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       4,
       6,
       5,
       0
      ],
      "xy": [
       190.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3
      ],
      "xy": [
       190.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       2,
       4
      ],
      "xy": [
       190.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 4,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       190.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 5,
      "neighbors": [
       1
      ],
      "xy": [
       190.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       7,
       1
      ],
      "xy": [
       200.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 7,
      "neighbors": [
       8,
       12,
       9,
       6
      ],
      "xy": [
       210.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 8,
      "neighbors": [
       7
      ],
      "xy": [
       210.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 9,
      "neighbors": [
       7,
       10
      ],
      "xy": [
       210.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 10,
      "neighbors": [
       9,
       11
      ],
      "xy": [
       210.0,
       55.0
      ]
     },
     {
      "color": "black",
      "id": 11,
      "neighbors": [
       10
      ],
      "xy": [
       210.0,
       65.0
      ]
     },
     {
      "color": "black",
      "id": 12,
      "neighbors": [
       13,
       7
      ],
      "xy": [
       220.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       230.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       240.0,
       35.0
      ]
     }
    ]
   },
   {
    "n_edges": 14,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       4
      ],
      "xy": [
       270.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       280.0,
       5.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1,
       3
      ],
      "xy": [
       280.0,
       15.0
      ]
     },
     {
      "color": "grey",
      "id": 3,
      "neighbors": [
       2,
       4
      ],
      "xy": [
       280.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3,
       8,
       5,
       0
      ],
      "xy": [
       280.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 5,
      "neighbors": [
       4,
       6
      ],
      "xy": [
       280.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5,
       7
      ],
      "xy": [
       280.0,
       55.0
      ]
     },
     {
      "color": "black",
      "id": 7,
      "neighbors": [
       6
      ],
      "xy": [
       280.0,
       65.0
      ]
     },
     {
      "color": "black",
      "id": 8,
      "neighbors": [
       9,
       4
      ],
      "xy": [
       290.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 9,
      "neighbors": [
       10,
       12,
       11,
       8
      ],
      "xy": [
       300.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 10,
      "neighbors": [
       9
      ],
      "xy": [
       300.0,
       25.0
      ]
     },
     {
      "color": "grey",
      "id": 11,
      "neighbors": [
       9
      ],
      "xy": [
       300.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 12,
      "neighbors": [
       13,
       9
      ],
      "xy": [
       310.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 13,
      "neighbors": [
       14,
       12
      ],
      "xy": [
       320.0,
       35.0
      ]
     },
     {
      "color": "grey",
      "id": 14,
      "neighbors": [
       13
      ],
      "xy": [
       330.0,
       35.0
      ]
     }
    ]
   }
  ]
 },
 "families": {
  "F1": {
   "constraints": [],
   "degenerations": [
    {
     "param": [
      0.0,
      0.0
     ],
     "tree": "T1"
    },
    {
     "param": [
      1.0,
      0.0
     ],
     "tree": "T3"
    },
    {
     "param": [
      0.6,
      0.0
     ],
     "tree": "T2"
    },
    {
     "param": [
      1.6666666666666667,
      0.0
     ],
     "tree": "T2"
    },
    {
     "param": [
      -0.6666666666666666,
      0.7453559924999299
     ],
     "tree": "T4"
    },
    {
     "param": [
      -0.6666666666666666,
      -0.7453559924999299
     ],
     "tree": "T4"
    }
   ],
   "integrand": [
    {
     "mult": 2,
     "root": [
      0.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "root": [
      1.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "param": "a"
    }
   ],
   "params": [
    "a"
   ]
  },
  "F2": {
   "constraints": [
    [
     {
      "param": "a"
     },
     {
      "value": [
       0.0,
       0.0
      ]
     }
    ]
   ],
   "degenerations": [
    {
     "param": [
      0.0,
      0.0
     ],
     "tree": "T1"
    },
    {
     "param": [
      1.0,
      0.0
     ],
     "tree": "T2"
    },
    {
     "param": [
      1.6666666666666667,
      0.0
     ],
     "tree": "T2"
    },
    {
     "param": [
      2.5,
      0.0
     ],
     "tree": "T2"
    },
    {
     "param": [
      2.23606797749979,
      0.0
     ],
     "tree": "T5"
    },
    {
     "param": [
      -2.23606797749979,
      0.0
     ],
     "tree": "T5"
    },
    {
     "param": [
      1.8090169943749475,
      0.0
     ],
     "tree": "T5"
    },
    {
     "param": [
      0.6909830056250525,
      0.0
     ],
     "tree": "T5"
    },
    {
     "param": [
      1.6666666666666667,
      0.7453559924999299
     ],
     "tree": "T4"
    },
    {
     "param": [
      1.6666666666666667,
      -0.7453559924999299
     ],
     "tree": "T4"
    }
   ],
   "integrand": [
    {
     "mult": 1,
     "root": [
      0.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "root": [
      1.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "param": "a"
    },
    {
     "mult": 1,
     "param": "b"
    }
   ],
   "params": [
    "a",
    "b"
   ]
  },
  "G1": {
   "constraints": [
    [
     {
      "value": [
       1.0,
       0.0
      ]
     },
     {
      "param": "b"
     }
    ]
   ],
   "integrand": [
    {
     "mult": 2,
     "root": [
      0.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "root": [
      1.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "param": "a"
    },
    {
     "mult": 1,
     "param": "b"
    }
   ],
   "params": [
    "a",
    "b"
   ]
  },
  "G2": {
   "constraints": [
    [
     {
      "param": "a"
     },
     {
      "value": [
       0.0,
       0.0
      ]
     }
    ],
    [
     {
      "param": "b"
     },
     {
      "value": [
       1.0,
       0.0
      ]
     }
    ]
   ],
   "integrand": [
    {
     "mult": 1,
     "root": [
      0.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "root": [
      1.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "param": "a"
    },
    {
     "mult": 1,
     "param": "b"
    },
    {
     "mult": 1,
     "param": "c"
    }
   ],
   "params": [
    "b",
    "a",
    "c"
   ]
  },
  "G3": {
   "constraints": [
    [
     {
      "value": [
       -1.0,
       0.0
      ]
     },
     {
      "value": [
       1.0,
       0.0
      ]
     }
    ],
    [
     {
      "value": [
       1.0,
       0.0
      ]
     },
     {
      "param": "c"
     }
    ]
   ],
   "integrand": [
    {
     "mult": 1,
     "root": [
      1.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "root": [
      -1.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "param": "a"
    },
    {
     "mult": 1,
     "param": "b"
    },
    {
     "mult": 1,
     "param": "c"
    }
   ],
   "params": [
    "a",
    "b",
    "c"
   ]
  },
  "H1": {
   "constraints": [
    [
     {
      "value": [
       1.0,
       0.0
      ]
     },
     {
      "value": [
       0.0,
       0.0
      ]
     }
    ],
    [
     {
      "param": "a"
     },
     {
      "param": "b"
     }
    ],
    [
     {
      "param": "c"
     },
     {
      "param": "d"
     }
    ]
   ],
   "integrand": [
    {
     "mult": 1,
     "root": [
      0.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "root": [
      1.0,
      0.0
     ]
    },
    {
     "mult": 1,
     "param": "a"
    },
    {
     "mult": 1,
     "param": "b"
    },
    {
     "mult": 1,
     "param": "c"
    },
    {
     "mult": 1,
     "param": "d"
    }
   ],
   "params": [
    "a",
    "b",
    "c",
    "d"
   ],
   "variety": true
  }
 },
 "paths": [
  {
   "anchors": [
    [
     0.0,
     0.0
    ],
    [
     0.6,
     0.0
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T1",
    "T2"
   ],
   "family": "F1",
   "id": "F1:T1-T2",
   "interior_trimmed": [
    [
     3
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {}
  },
  {
   "anchors": [
    [
     0.0,
     0.0
    ],
    [
     0.5,
     -0.5
    ],
    [
     1.0,
     0.0
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T1",
    "T3"
   ],
   "family": "F1",
   "id": "F1:T1-T3",
   "interior_trimmed": [
    [
     3
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {}
  },
  {
   "anchors": [
    [
     0.0,
     0.0
    ],
    [
     -0.6666666666666666,
     0.7453559924999299
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T1",
    "T4"
   ],
   "family": "F1",
   "id": "F1:T1-T4",
   "interior_trimmed": [
    [
     3
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {}
  },
  {
   "anchors": [
    [
     0.6,
     0.0
    ],
    [
     1.0,
     0.0
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T2",
    "T3"
   ],
   "family": "F1",
   "id": "F1:T2-T3",
   "interior_trimmed": [
    [
     3
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {}
  },
  {
   "anchors": [
    [
     0.6,
     0.0
    ],
    [
     -0.6666666666666666,
     0.7453559924999299
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T2",
    "T4"
   ],
   "family": "F1",
   "id": "F1:T2-T4",
   "interior_trimmed": [
    [
     3
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {}
  },
  {
   "anchors": [
    [
     1.0,
     0.0
    ],
    [
     -0.6666666666666666,
     0.7453559924999299
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T3",
    "T4"
   ],
   "family": "F1",
   "id": "F1:T3-T4",
   "interior_trimmed": [
    [
     3
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {}
  },
  {
   "anchors": [
    [
     0.0,
     0.0
    ],
    [
     1.1,
     -0.7
    ],
    [
     2.23606797749979,
     0.0
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T1",
    "T5"
   ],
   "family": "F2",
   "id": "F2:T1-T5",
   "interior_trimmed": [
    [
     2,
     2
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {
    "b": [
     0.0,
     0.0
    ]
   }
  },
  {
   "anchors": [
    [
     1.0,
     0.0
    ],
    [
     1.4,
     -0.4
    ],
    [
     1.8090169943749475,
     0.0
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T2",
    "T5"
   ],
   "family": "F2",
   "id": "F2:T2-T5",
   "interior_trimmed": [
    [
     2,
     2
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {
    "b": [
     0.4,
     0.0
    ]
   }
  },
  {
   "anchors": [
    [
     1.6666666666666667,
     0.7453559924999299
    ],
    [
     2.23606797749979,
     0.0
    ]
   ],
   "edges": 5,
   "endpoints": [
    "T4",
    "T5"
   ],
   "family": "F2",
   "id": "F2:T4-T5",
   "interior_trimmed": [
    [
     2,
     2
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {
    "b": [
     1.0,
     0.0
    ]
   }
  },
  {
   "anchors": [
    [
     0.0,
     0.0
    ],
    [
     -0.0,
     -1.0
    ],
    [
     2.0,
     -1.0
    ],
    [
     2.0,
     0.0
    ],
    [
     2.0,
     0.8660254037844386
    ],
    [
     -0.5,
     0.8660254037844386
    ]
   ],
   "edges": 6,
   "endpoints": [
    "T4",
    "T12"
   ],
   "family": "G1",
   "id": "G1:T4-T12",
   "interior_trimmed": [
    [
     3
    ],
    [
     2,
     2
    ],
    [
     2
    ]
   ],
   "seeds": {
    "b": [
     -1.0,
     0.0
    ]
   }
  },
  {
   "anchors": [
    [
     -0.5735099654192904,
     0.5879489924960436
    ],
    [
     -1.0,
     0.0
    ]
   ],
   "edges": 6,
   "endpoints": [
    "T10",
    "T13"
   ],
   "family": "G2",
   "id": "G2:T10-T13",
   "interior_trimmed": [
    [
     2,
     2
    ],
    [
     2,
     2
    ],
    [
     2
    ]
   ],
   "seeds": {
    "a": [
     1.5715697332352636,
     -0.03350166629553692
    ],
    "c": [
     0.0,
     0.0
    ]
   }
  },
  {
   "anchors": [
    [
     0.0,
     0.5773502691896258
    ],
    [
     0.5773502691896258,
     0.0
    ]
   ],
   "edges": 6,
   "endpoints": [
    "T12",
    "T13"
   ],
   "family": "G3",
   "id": "G3:T12-T13",
   "interior_trimmed": [
    [
     2,
     2,
     2
    ],
    [
     2
    ],
    [
     2
    ]
   ],
   "seeds": {
    "b": [
     0.0,
     0.5773502691896258
    ],
    "c": [
     0.0,
     1.7320508075688772
    ]
   }
  }
 ],
 "reference_trees": {
  "example_5edge": {
   "n_edges": 5,
   "vertices": [
    {
     "color": "black",
     "id": 0,
     "neighbors": [
      2
     ],
     "xy": [
      0.0,
      5.0
     ]
    },
    {
     "color": "black",
     "id": 1,
     "neighbors": [
      2
     ],
     "xy": [
      0.0,
      35.0
     ]
    },
    {
     "color": "white",
     "id": 2,
     "neighbors": [
      0,
      3,
      1
     ],
     "xy": [
      15.0,
      20.0
     ]
    },
    {
     "color": "black",
     "id": 3,
     "neighbors": [
      4,
      2
     ],
     "xy": [
      35.0,
      20.0
     ]
    },
    {
     "color": "white",
     "id": 4,
     "neighbors": [
      5,
      3
     ],
     "xy": [
      55.0,
      20.0
     ]
    },
    {
     "color": "black",
     "id": 5,
     "neighbors": [
      4
     ],
     "xy": [
      75.0,
      20.0
     ]
    }
   ]
  },
  "five_edge": {
   "T1": {
    "n_edges": 5,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       4,
       3,
       0
      ],
      "xy": [
       15.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       15.0,
       20.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       15.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       30.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       45.0,
       35.0
      ]
     }
    ]
   },
   "T2": {
    "n_edges": 5,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       2
      ],
      "xy": [
       75.0,
       20.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       75.0,
       50.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       0,
       3,
       1
      ],
      "xy": [
       90.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       105.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       120.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       135.0,
       35.0
      ]
     }
    ]
   },
   "T3": {
    "n_edges": 5,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       2
      ],
      "xy": [
       165.0,
       20.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       165.0,
       50.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       0,
       3,
       1
      ],
      "xy": [
       180.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       5,
       2
      ],
      "xy": [
       195.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       210.0,
       20.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       3
      ],
      "xy": [
       210.0,
       50.0
      ]
     }
    ]
   },
   "T4": {
    "n_edges": 5,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       3,
       0
      ],
      "xy": [
       15.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       4,
       1
      ],
      "xy": [
       30.0,
       25.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       1,
       5
      ],
      "xy": [
       30.0,
       45.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       2
      ],
      "xy": [
       45.0,
       15.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       3
      ],
      "xy": [
       45.0,
       55.0
      ]
     }
    ]
   },
   "T5": {
    "n_edges": 5,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       75.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       90.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       105.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       120.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       135.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       150.0,
       35.0
      ]
     }
    ]
   }
  },
  "six_edge": {
   "T1": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       2
      ],
      "xy": [
       0.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       0.0,
       20.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1,
       4,
       5,
       3,
       0
      ],
      "xy": [
       15.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       2
      ],
      "xy": [
       30.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       2
      ],
      "xy": [
       30.0,
       20.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6,
       2
      ],
      "xy": [
       40.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       55.0,
       35.0
      ]
     }
    ]
   },
   "T10": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       15.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       4,
       3,
       1
      ],
      "xy": [
       30.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       2
      ],
      "xy": [
       30.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       2
      ],
      "xy": [
       45.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       60.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       75.0,
       35.0
      ]
     }
    ]
   },
   "T12": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       2
      ],
      "xy": [
       110.0,
       55.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       3
      ],
      "xy": [
       110.0,
       15.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       4,
       0
      ],
      "xy": [
       125.0,
       45.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       1,
       4
      ],
      "xy": [
       125.0,
       25.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3,
       5,
       2
      ],
      "xy": [
       140.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       160.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       175.0,
       35.0
      ]
     }
    ]
   },
   "T13": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       200.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       215.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       3,
       1
      ],
      "xy": [
       230.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       245.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       260.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       275.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       290.0,
       35.0
      ]
     }
    ]
   },
   "T2": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       80.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       3,
       4,
       2,
       0
      ],
      "xy": [
       95.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       95.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       95.0,
       20.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       5,
       1
      ],
      "xy": [
       110.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       125.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       140.0,
       35.0
      ]
     }
    ]
   },
   "T3": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       165.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       3,
       4,
       2,
       0
      ],
      "xy": [
       180.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       180.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       1
      ],
      "xy": [
       180.0,
       20.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       6,
       5,
       1
      ],
      "xy": [
       200.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       215.0,
       50.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       4
      ],
      "xy": [
       215.0,
       20.0
      ]
     }
    ]
   },
   "T4": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       240.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       255.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       4,
       5,
       3,
       1
      ],
      "xy": [
       270.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       2
      ],
      "xy": [
       270.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 4,
      "neighbors": [
       2
      ],
      "xy": [
       270.0,
       20.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6,
       2
      ],
      "xy": [
       285.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       300.0,
       35.0
      ]
     }
    ]
   },
   "T5": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "white",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       0.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2,
       0
      ],
      "xy": [
       15.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       3,
       6,
       5,
       1
      ],
      "xy": [
       35.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       55.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       70.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       2
      ],
      "xy": [
       20.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       2
      ],
      "xy": [
       50.0,
       50.0
      ]
     }
    ]
   },
   "T6": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       2
      ],
      "xy": [
       95.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       95.0,
       20.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1,
       3,
       0
      ],
      "xy": [
       110.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       125.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       6,
       5,
       3
      ],
      "xy": [
       140.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       4
      ],
      "xy": [
       155.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       4
      ],
      "xy": [
       155.0,
       20.0
      ]
     }
    ]
   },
   "T7": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       1
      ],
      "xy": [
       180.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 1,
      "neighbors": [
       3,
       2,
       0
      ],
      "xy": [
       195.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 2,
      "neighbors": [
       1
      ],
      "xy": [
       195.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       5,
       1
      ],
      "xy": [
       215.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       3
      ],
      "xy": [
       215.0,
       20.0
      ]
     },
     {
      "color": "white",
      "id": 5,
      "neighbors": [
       6,
       3
      ],
      "xy": [
       230.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       245.0,
       35.0
      ]
     }
    ]
   },
   "T9": {
    "n_edges": 6,
    "vertices": [
     {
      "color": "black",
      "id": 0,
      "neighbors": [
       2
      ],
      "xy": [
       270.0,
       50.0
      ]
     },
     {
      "color": "black",
      "id": 1,
      "neighbors": [
       2
      ],
      "xy": [
       270.0,
       20.0
      ]
     },
     {
      "color": "white",
      "id": 2,
      "neighbors": [
       1,
       3,
       0
      ],
      "xy": [
       285.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 3,
      "neighbors": [
       4,
       2
      ],
      "xy": [
       300.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 4,
      "neighbors": [
       5,
       3
      ],
      "xy": [
       315.0,
       35.0
      ]
     },
     {
      "color": "black",
      "id": 5,
      "neighbors": [
       6,
       4
      ],
      "xy": [
       330.0,
       35.0
      ]
     },
     {
      "color": "white",
      "id": 6,
      "neighbors": [
       5
      ],
      "xy": [
       345.0,
       35.0
      ]
     }
    ]
   }
  }
 }
}
)ZJSON";
    return s;
}

}  // namespace zolo::detail
