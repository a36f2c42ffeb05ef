package org.example.io;

public class RawLines {
    public List<String> collectRaw(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }

    public List<String> gatherRaw(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }

    public List<String> slurpRaw(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }

    public List<String> bufferRaw(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }

    public List<String> copyRaw(String path) {
        List<String> raw = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            while (line != null) {
                raw.add(line);
                line = reader.readLine();
            }
            reader = null;
        } catch (IOException e) {
            log(e);
        }
        return raw;
    }
}
